use super::*;
use crate::braids::{Letter, Sign};

fn w(names: &[&str]) -> ColourWord {
    ColourWord::from_names(names)
}

fn braid_of(cell: &TrackedTwoCell) -> ColouredBraid {
    extract_braid(cell).unwrap()
}

fn e() -> TrackedTwoCell {
    generator_cell(CellKind::E, &ColourWord::empty(), false).unwrap()
}

#[test]
fn identity_cells() {
    let d = serial(&w(&["a", "b"]));
    let id = identity_cell(&d);
    assert!(braid_of(&id).is_identity());
    let t = braiding_cell(&w(&["a"]), &w(&["b"])).unwrap();
    let left = vcompose(&identity_cell(t.source()), &t).unwrap();
    assert!(braid_of(&left).equals(&braid_of(&t)));
    let tensor = DiagramWord::train(crate::Colour::new("a").unwrap())
        .tensor(&DiagramWord::train(crate::Colour::new("b").unwrap()));
    let swapped = DiagramWord::from_pairs(2, [(1, crate::Generator::train("b")), (0, crate::Generator::train("a"))])
        .unwrap();
    assert_eq!(identity_cell(&tensor), identity_cell(&swapped));
}

#[test]
fn vertical_composition() {
    let t = braiding_cell(&w(&["a"]), &w(&["b"])).unwrap();
    assert!(braid_of(&vcompose(&t, &invert_cell(&t)).unwrap()).is_identity());
    let back = braiding_cell(&w(&["b"]), &w(&["a"])).unwrap();
    let x = vcompose(&vcompose(&t, &back).unwrap(), &t).unwrap();
    let y = vcompose(&t, &vcompose(&back, &t).unwrap()).unwrap();
    assert_eq!(braid_of(&x).word(), braid_of(&y).word());
    assert!(matches!(vcompose(&t, &t), Err(CellError::BoundaryMismatch { .. })));
}

#[test]
fn horizontal_composition_of_identities() {
    let d1 = DiagramWord::beta().tensor(&DiagramWord::train(crate::Colour::new("a").unwrap()));
    let d2 = crate::dsl::parse("(b * alpha) ; alpha", &crate::ColourSet::parse("a,b").unwrap()).unwrap();
    let h = hcompose(&identity_cell(&d1), &identity_cell(&d2)).unwrap();
    assert!(braid_of(&h).is_identity());
    assert_eq!(h.source(), &d1.compose(&d2).unwrap().canonicalize());
}

#[test]
fn whiskering_a_trainless_cell() {
    let g = serial(&w(&["g"]));
    let cell = hcompose(&e(), &identity_cell(&g)).unwrap();
    let b = braid_of(&cell);
    assert!(b.word().is_empty());
    assert_eq!(b.source(), &w(&["g"]));
}

#[test]
fn tensor_of_cells_is_the_tensor_of_braids() {
    let t = braiding_cell(&w(&["a"]), &w(&["b"])).unwrap();
    let id_c = identity_cell(&serial(&w(&["c"])));
    let b = braid_of(&tensor_cells(&t, &id_c).unwrap());
    assert!(b.equals(&braid_of(&t).tensor(&braid_of(&id_c))));
    let b = braid_of(&tensor_cells(&id_c, &t).unwrap());
    assert!(b.equals(&braid_of(&id_c).tensor(&braid_of(&t))));
    let ids = tensor_cells(&id_c, &identity_cell(&serial(&w(&["a"])))).unwrap();
    assert!(braid_of(&ids).is_identity());
}

#[test]
fn generator_cells() {
    let b = braid_of(&e());
    assert!(b.is_identity() && b.source().is_empty());
    for kind in [CellKind::L, CellKind::R, CellKind::Lbar, CellKind::Rbar] {
        let cell = generator_cell(kind, &w(&["a"]), false).unwrap();
        let b = braid_of(&cell);
        assert!(b.is_identity());
        assert_eq!(b.source(), &w(&["a"]));
        let inv = generator_cell(kind, &w(&["a"]), true).unwrap();
        assert_eq!(inv.source(), cell.target());
    }
    assert_eq!("Lbar".parse::<CellKind>().unwrap(), CellKind::Lbar);
    assert_eq!("Q".parse::<CellKind>(), Err(CellError::UnknownCell("Q".into())));
}

#[test]
fn l_cells_compose_along_words() {
    // L_{ab} against (Ia # L_b) then (L_a # b).
    let (a, b) = (w(&["a"]), w(&["b"]));
    let ia = DiagramWord::identity(1).unwrap().tensor(&serial(&a));
    let whole = generator_cell(CellKind::L, &w(&["a", "b"]), false).unwrap();
    let steps = vcompose(
        &hcompose(&identity_cell(&ia), &generator_cell(CellKind::L, &b, false).unwrap()).unwrap(),
        &hcompose(&generator_cell(CellKind::L, &a, false).unwrap(), &identity_cell(&serial(&b))).unwrap(),
    )
    .unwrap();
    assert_eq!(whole.source(), steps.source());
    assert_eq!(whole.target(), steps.target());
    assert!(braid_of(&whole).equals(&braid_of(&steps)));
}

#[test]
fn braiding_is_one_crossing() {
    let b = braid_of(&braiding_cell(&w(&["a"]), &w(&["b"])).unwrap());
    let crossing = ColouredBraid::new(w(&["a", "b"]), vec![Letter::new(1, GEOMETRIC_HANDEDNESS)]).unwrap();
    assert!(b.equals(&crossing));
    assert!(!b.is_identity());
    assert_eq!(b.target(), w(&["b", "a"]));
    assert_eq!(
        measure_handedness(&crate::Colour::new("a").unwrap(), &crate::Colour::new("b").unwrap()).unwrap(),
        Some(GEOMETRIC_HANDEDNESS)
    );
}

#[test]
fn braiding_is_not_a_symmetry() {
    let there = braiding_cell(&w(&["a"]), &w(&["b"])).unwrap();
    let back = braiding_cell(&w(&["b"]), &w(&["a"])).unwrap();
    let round = braid_of(&vcompose(&there, &back).unwrap());
    assert!(!round.is_identity());
    assert_eq!(round.exponent_sum(), 2 * i64::from(GEOMETRIC_HANDEDNESS.as_i8()));
}

#[test]
fn braiding_of_words_is_a_block_braiding() {
    let (f, g) = (w(&["a"]), w(&["b", "c"]));
    let b = braid_of(&braiding_cell(&f, &g).unwrap());
    assert!(b.equals(&ColouredBraid::block_braiding(&f, &g, GEOMETRIC_HANDEDNESS)));
    assert!(!b.equals(&ColouredBraid::block_braiding(&f, &g, GEOMETRIC_HANDEDNESS.flip())));
    let mirrored = oriented(b, Sign::Positive);
    assert!(mirrored.equals(&ColouredBraid::block_braiding(&f, &g, Sign::Positive)));
}

#[test]
fn seven_steps_regression() {
    let steps = braiding_steps(&w(&["a"]), &w(&["b"])).unwrap();
    let printed: Vec<String> = steps
        .iter()
        .map(|s| format!("{} => {} : {}", s.source(), s.target(), braid_of(s)))
        .collect();
    assert_eq!(
        printed,
        [
            "a ; b => a ; beta ; alpha ; b : (a,b) id",
            "a ; beta ; alpha ; b => beta ; (id[1] * a) ; alpha ; b : (a,b) s1^-1",
            "beta ; (id[1] * a) ; alpha ; b => beta ; (b * id[1]) ; (id[1] * a) ; alpha : (b,a) s1 s1^-1",
            "beta ; (b * id[1]) ; (id[1] * a) ; alpha => beta ; (b * id[1]) ; (id[1] * a) ; alpha : (b,a) id",
            "beta ; (b * id[1]) ; (id[1] * a) ; alpha => beta ; (b * id[1]) ; alpha ; a : (b,a) id",
            "beta ; (b * id[1]) ; alpha ; a => b ; beta ; alpha ; a : (b,a) id",
            "b ; beta ; alpha ; a => b ; a : (b,a) id",
        ]
    );
    let whole = steps[1..].iter().fold(steps[0].clone(), |acc, s| vcompose(&acc, s).unwrap());
    assert_eq!(whole, braiding_cell(&w(&["a"]), &w(&["b"])).unwrap());
}

#[test]
fn boundary_coherence() {
    let cell = braiding_cell(&w(&["a", "b"]), &w(&["c"])).unwrap();
    let b = braid_of(&cell);
    assert_eq!(b.source(), &crate::geometry::theta(cell.source()).0);
    assert_eq!(b.target(), crate::geometry::theta(cell.target()).0);
}

#[test]
fn small_suites_pass() {
    let config = SuiteConfig {
        budget: Some(10),
        ..SuiteConfig::default()
    };
    for check in CHECKS {
        let report = run_axiom_suite(check, &config);
        assert!(report.passed(), "{}", serde_json::to_string(&report).unwrap());
    }
}

#[test]
fn report_json_shape() {
    let config = SuiteConfig::default();
    let report = run_axiom_suite(Check::PentagonA, &config);
    assert_eq!(
        serde_json::to_string(&report).unwrap(),
        r#"{"check":"pentagon_A","instances":1,"failures":[]}"#
    );
}
