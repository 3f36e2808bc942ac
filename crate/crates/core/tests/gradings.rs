//! Rotation numbers, areas, grading differences and d-invariant differences.

mod common;

use common::labeled_symmetric_letters;
use plumbcurve::error::Error;
use plumbcurve::fixtures;
use plumbcurve::geometry::{delta_sym, distinguished_component, fixed_points, word_generators, HalfPoint, Step};
use plumbcurve::gradings::*;
use plumbcurve::loopcalc::invariant;
use plumbcurve::rational::rat;
use plumbcurve::words::{canonicalize, CurveClass, CyclicWord, HstType};
use proptest::prelude::*;

fn word(s: &str) -> CyclicWord {
    s.parse().unwrap()
}

fn pt(x2: i64, y2: i64) -> HalfPoint {
    HalfPoint::new(x2, y2)
}

#[test]
fn turns() {
    assert_eq!(turn(Step::Up, Step::Up).unwrap(), rat(0, 1));
    assert_eq!(turn(Step::Right, Step::Up).unwrap(), rat(1, 2));
    assert_eq!(turn(Step::Up, Step::Right).unwrap(), rat(-1, 2));
    assert_eq!(turn(Step::Left, Step::Right), Err(Error::InteriorReversal));
}

#[test]
fn rotation_of_paths() {
    let square = CurveSegmentPath::new(vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(0, 0)]);
    // three interior left turns; the closing turn needs tangents
    assert_eq!(rotation_number(&square).unwrap(), rat(3, 2));
    let closed = square.clone().with_tangents(Step::Right, Step::Right);
    assert_eq!(rotation_number(&closed).unwrap(), rat(2, 1));
    let straight = CurveSegmentPath::new(vec![pt(0, 0), pt(0, 4)]).with_tangents(Step::Up, Step::Up);
    assert_eq!(rotation_number(&straight).unwrap(), rat(0, 1));
    let back = CurveSegmentPath::new(vec![pt(0, 0), pt(2, 0), pt(0, 0)]);
    assert_eq!(rotation_number(&back), Err(Error::InteriorReversal));
}

#[test]
fn enclosed_areas() {
    let ccw = CurveSegmentPath::new(vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(0, 0)]);
    assert_eq!(enclosed_area(&ccw).unwrap(), rat(1, 1));
    let cw = CurveSegmentPath::new(ccw.points.iter().rev().copied().collect());
    assert_eq!(enclosed_area(&cw).unwrap(), rat(-1, 1));
    let open = CurveSegmentPath::new(vec![pt(0, 0), pt(2, 0), pt(2, 2)]);
    assert_eq!(enclosed_area(&open), Err(Error::NotClosed));
}

fn ta_word() -> CyclicWord {
    distinguished_component(&invariant(&fixtures::ta()).unwrap()).unwrap()
}

#[test]
fn ta_gradings_form_a_cocycle() {
    let w = ta_word();
    let gens = word_generators(&w, 0).unwrap();
    for x in &gens {
        for y in &gens {
            assert_eq!(grading_diff_general(&w, x, x).unwrap(), rat(0, 1));
            let xy = grading_diff_general(&w, x, y).unwrap();
            let yx = grading_diff_general(&w, y, x).unwrap();
            assert_eq!(xy, -yx, "antisymmetry");
            for z in &gens {
                let xz = grading_diff_general(&w, x, z).unwrap();
                let yz = grading_diff_general(&w, y, z).unwrap();
                assert_eq!(xz, xy + yz, "additivity");
            }
        }
    }
}

#[test]
fn same_spinc_formula() {
    let w = ta_word();
    let gens = word_generators(&w, 0).unwrap();
    let sp = fixed_points(&w).unwrap();
    let x0 = gens.iter().find(|g| g.t2 == sp.t0).unwrap();
    let y1 = gens.iter().find(|g| g.point == pt(2, 3)).unwrap();
    let y3 = gens.iter().find(|g| g.point == pt(-2, -1)).unwrap();
    // y1 and y3 differ by a period of the lift
    assert_eq!(grading_diff_same_spinc(&w, y1, y3).unwrap(), rat(0, 1));
    for y in &gens {
        let t = grading_terms_oriented(&w, x0, y).unwrap();
        match grading_diff_same_spinc(&w, x0, y) {
            Ok(v) => {
                assert_eq!(t.n, 1);
                assert_eq!(v, t.value);
            }
            Err(e) => {
                assert_ne!(t.n, 1);
                assert_eq!(e, Error::DifferentSpinc);
            }
        }
    }
}

#[test]
fn fixed_point_gradings() {
    let cases = [
        (fixtures::t1(), rat(-1, 2), rat(-1, 2), rat(0, 1)),
        (fixtures::tb(), rat(0, 1), rat(0, 1), rat(0, 1)),
        (fixtures::ta(), rat(3, 2), rat(5, 2), rat(1, 1)),
    ];
    for (tree, value, area, rot) in cases {
        let w = distinguished_component(&invariant(&tree).unwrap()).unwrap();
        let f = grading_diff_fixed(&w).unwrap();
        assert_eq!((f.value, f.area, f.rot), (value, area, rot), "{w}");
        assert_eq!(f.area, delta_sym(&w).unwrap());
        let sp = fixed_points(&w).unwrap();
        let gens = word_generators(&w, 0).unwrap();
        let x0 = gens.iter().find(|g| g.t2 == sp.t0).unwrap();
        let x1 = gens.iter().find(|g| g.t2 == sp.t1).unwrap();
        assert_eq!(grading_diff_general(&w, x0, x1).unwrap(), f.value, "{w}");
    }
    assert_eq!(grading_diff_fixed(&word("ab")), Err(Error::NotTypeAlpha));
    assert_eq!(grading_diff_fixed(&word("aab")).unwrap().value, rat(1, 2));
}

#[test]
fn delta_d_examples() {
    let t1 = delta_d(&fixtures::t1()).unwrap();
    assert_eq!((t1.value, t1.regime), (rat(-1, 2), DeltaDRegime::LSpace));
    let tb = delta_d(&fixtures::tb()).unwrap();
    assert_eq!((tb.value, tb.regime), (rat(0, 1), DeltaDRegime::LSpace));
    let ta = delta_d(&fixtures::ta()).unwrap();
    assert_eq!((ta.value, ta.regime), (rat(1, 2), DeltaDRegime::GradingEstimate));
    assert_eq!(delta_d(&fixtures::t0()), Err(Error::SingularForm));
}

#[test]
fn lspace_examples() {
    assert!(is_lspace(&fixtures::tb()).unwrap());
    assert!(is_lspace(&fixtures::t1()).unwrap());
    assert!(!is_lspace(&fixtures::ta()).unwrap());
    assert_eq!(is_lspace(&fixtures::t0()), Err(Error::SingularForm));
}

#[test]
fn grading_table_is_relative_to_first_generator() {
    let mc = invariant(&fixtures::ta()).unwrap();
    let table = grading_table(mc.components()).unwrap();
    assert_eq!(table.len(), 4);
    assert_eq!(table[0].grading, rat(0, 1));
}

fn type_alpha_symmetric() -> impl Strategy<Value = CyclicWord> {
    labeled_symmetric_letters(4).prop_filter_map("type alpha", |letters| {
        let w = canonicalize(&letters).ok()?;
        let cls = CurveClass::of_letters(w.letters());
        (cls.hst_type == HstType::Alpha && cls.a != 0).then_some(w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn fixed_area_is_delta_sym(w in type_alpha_symmetric()) {
        if let Ok(f) = grading_diff_fixed(&w) {
            prop_assert_eq!(f.area, delta_sym(&w).unwrap());
            prop_assert_eq!(f.value, f.area - f.rot);
        }
    }

    #[test]
    fn general_formula_is_a_cocycle(w in type_alpha_symmetric()) {
        let gens = word_generators(&w, 0).unwrap();
        for x in &gens {
            for y in &gens {
                let xy = grading_diff_general(&w, x, y).unwrap();
                let yx = grading_diff_general(&w, y, x).unwrap();
                prop_assert_eq!(xy, -yx, "{} {:?} {:?}", w, x, y);
            }
        }
    }
}
