use gqtvc_core::exec::Ctx;
use gqtvc_core::formulas::{expected_count, verify_formula, verify_on_graph, CompleteCase, FormulaId, Order5Type};
use gqtvc_core::geometry::{build_elliptic_gq, build_symplectic_gq, point_graph, validate_pls};

#[test]
fn order5_formulas_on_symplectic_quadrangles() {
    for q in [2, 3] {
        let gq = build_symplectic_gq(q).unwrap();
        for ty in Order5Type::ALL {
            let report = verify_formula(&gq, FormulaId::Order5(ty), Ctx::sequential()).unwrap();
            assert!(report.passed(), "W({q}) {ty:?}: {report:?}");
        }
    }
}

#[test]
fn full_catalogue_on_gq_3_9() {
    let gq = build_elliptic_gq(3).unwrap();
    let g = point_graph(&gq);
    for id in FormulaId::catalogue(2..=5) {
        let report = verify_on_graph(&g, (3, 9), id, Ctx::sequential()).unwrap();
        assert!(report.passed(), "{id}: {report:?}");
    }
}

#[test]
fn one_one_same_on_gq_3_9_is_240() {
    let gq = build_elliptic_gq(3).unwrap();
    let id = FormulaId::CompleteS { case: CompleteCase::OneOne { same: true }, size: 3 };
    let report = verify_formula(&gq, id, Ctx::sequential()).unwrap();
    let non_edges = report.classes.iter().find(|c| !c.adjacent).unwrap();
    assert_eq!(non_edges.expected, Some(240));
    assert!(report.passed());
}

// The bridge count carries a factor (s - 3), so s = 4 is the first order
// where it is not identically zero.
#[test]
fn bridge_and_complete_s_on_gq_4_16() {
    let gq = build_elliptic_gq(4).unwrap();
    assert_eq!(validate_pls(&gq).unwrap(), (4, 16));
    let g = point_graph(&gq);
    for order in 6..=8 {
        let id = FormulaId::CliqueBridge { order };
        assert!(expected_count(id, 4, 16, true).unwrap() > 0);
        let report = verify_on_graph(&g, (4, 16), id, Ctx::sequential()).unwrap();
        assert!(report.passed(), "{id}: {report:?}");
    }
    let cheap =
        [CompleteCase::FullFull, CompleteCase::FullOne, CompleteCase::FullZero, CompleteCase::OneOne { same: true }];
    for case in cheap {
        let id = FormulaId::CompleteS { case, size: 4 };
        let report = verify_on_graph(&g, (4, 16), id, Ctx::sequential()).unwrap();
        assert!(report.passed(), "{id}: {report:?}");
    }
}
