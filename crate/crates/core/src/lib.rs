//! Generalised quadrangles, their point graphs, and the regularity hierarchy
//! above them: regularity, strong regularity, k-isoregularity and the
//! t-vertex condition.
//!
//! The crate is `no_std` and only needs `alloc`. Anything that touches a
//! clock, a thread or a file lives in the companion `gqtvc` crate, which
//! plugs into the [`exec::Executor`] and [`exec::Budget`] traits defined here.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bitset;
pub mod exec;
pub mod formulas;
pub mod geometry;
pub mod graph;
pub mod regularity;
pub mod tvc;

pub use bitset::BitSet;
pub use graph::{CanonicalCode, Graph, GraphError};

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(9, 0), 1);
        assert_eq!(binomial(9, 3), 84);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(94, 3), 134_044);
    }
}
