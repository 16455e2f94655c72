//! Built-in quadrangles, addressable by name.

use gqtvc_core::algebra::Field;
use gqtvc_core::exec::Ctx;
use gqtvc_core::geometry::{
    build_elliptic_gq, build_flock_gq, build_symplectic_gq, build_t2star_gq, dualize, least_irreducible_quadratic,
    payne_qclan, GeometryError, PartialLinearSpace,
};
use serde_json::{json, Value};

pub const NAMES: [&str; 6] = ["w2", "w3", "q5_2", "q5_3", "t2star", "payne"];

pub struct Construction {
    pub name: String,
    pub dual: bool,
    pub geometry: PartialLinearSpace,
    /// Field, modulus and form data needed to rebuild the geometry.
    pub parameters: Value,
}

fn field_json(f: &Field) -> Value {
    json!({ "order": f.order(), "characteristic": f.characteristic(), "modulus": f.modulus() })
}

pub fn describe(name: &str) -> Option<Value> {
    let v = match name {
        "w2" | "w3" => {
            let q: u32 = name[1..].parse().unwrap();
            json!({
                "family": "symplectic W(q)",
                "q": q,
                "field": field_json(&Field::of_order(q).unwrap()),
                "form": "x0*y1 - x1*y0 + x2*y3 - x3*y2",
            })
        }
        "q5_2" | "q5_3" => {
            let q: u32 = name[3..].parse().unwrap();
            let f = Field::of_order(q).unwrap();
            let (c0, c1) = least_irreducible_quadratic(&f);
            json!({
                "family": "elliptic quadric Q-(5,q)",
                "q": q,
                "field": field_json(&f),
                "form": format!("x0*x1 + x2*x3 + x4^2 + {c1}*x4*x5 + {c0}*x5^2"),
            })
        }
        "t2star" => json!({
            "family": "T2*(O)",
            "q": 4,
            "field": field_json(&Field::of_order(4).unwrap()),
            "hyperoval": "{(1,t,t^2)} + {(0,1,0),(0,0,1)}",
        }),
        "payne" => {
            let clan = payne_qclan();
            json!({
                "family": "flock quadrangle from a q-clan",
                "q": 5,
                "field": field_json(clan.field()),
                "clan": "A_t = [[t, 3t^2], [0, 3t^3]]",
            })
        }
        _ => return None,
    };
    Some(v)
}

pub fn build(name: &str, dual: bool, ctx: Ctx<'_>) -> Result<Option<Construction>, GeometryError> {
    let Some(parameters) = describe(name) else { return Ok(None) };
    let geometry = match name {
        "w2" => build_symplectic_gq(2)?,
        "w3" => build_symplectic_gq(3)?,
        "q5_2" => build_elliptic_gq(2)?,
        "q5_3" => build_elliptic_gq(3)?,
        "t2star" => build_t2star_gq()?,
        "payne" => build_flock_gq(&payne_qclan(), ctx)?,
        _ => unreachable!(),
    };
    let geometry = if dual { dualize(&geometry).map_err(GeometryError::NotPls)? } else { geometry };
    Ok(Some(Construction { name: name.to_string(), dual, geometry, parameters }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in NAMES {
            assert!(describe(name).is_some(), "{name}");
        }
        assert!(describe("w9").is_none());
        assert!(build("nope", false, Ctx::sequential()).unwrap().is_none());
        let c = build("t2star", true, Ctx::sequential()).unwrap().unwrap();
        assert_eq!(c.geometry.order, Some((5, 3)));
        assert_eq!(c.geometry.num_points, 96);
    }
}
