//! Std companion to `gqtvc-core`: graph6 and incidence files, a thread pool
//! and deadline for the core's execution hooks, the built-in construction
//! registry and the `gqtvc` command line.

pub mod cli;
pub mod exec;
pub mod graph6;
pub mod incidence;
pub mod registry;
