//! Worked examples with known answers, one test per operation.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use knotpair::alpha::alpha_classify;
use knotpair::db::{Database, KnotRecord};
use knotpair::diagram::{coloring_generators, weight_gram, KnotDiagram};
use knotpair::families::{
    pretzel_grams, torus_delta, torus_q_coefficient, PretzelParams, TorusData, TorusParams,
};
use knotpair::laurent::{LaurentPoly, Unit};
use knotpair::linalg::{IntMatrix, PolyMatrix};
use knotpair::quandle::{
    cocycle_invariant, quandle_h2, Bilinear, Cocycle2, Enumeration, FiniteAlexanderQuandle,
};
use knotpair::quotient::{Class, Modulus, QElem, Solve};
use knotpair::report::{analyze, AnalysisOptions};
use knotpair::seifert::{Normalization, SeifertData};

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn trefoil_mod() -> Arc<Modulus> {
    Modulus::knot(&p("t^2 - t + 1")).unwrap()
}

fn int(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn laurent_arithmetic() {
    assert_eq!(p("1 - t") * p("t"), p("t - t^2"));
    assert_eq!(p("t^2 - t + 1") * p("t^2 + t + 1"), p("t^4 + t^2 + 1"));
    let x = p("3*t^-2 - t + 7*t^5");
    assert!((&x + &(-&x)).is_zero());
}

#[test]
fn laurent_bar() {
    assert_eq!(p("t^2 - t + 1").bar(), p("t^-2 - t^-1 + 1"));
    assert!(LaurentPoly::zero().bar().is_zero());
    let b = p("2*t^2 - 3*t + 2").bar();
    assert_eq!(b, p("2*t^-2 - 3*t^-1 + 2"));
    assert_eq!(b.normalize().unwrap().0, p("2*t^2 - 3*t + 2"));
}

#[test]
fn laurent_normalize() {
    assert_eq!(
        p("-t^-1 + 1 - t").normalize().unwrap(),
        (p("t^2 - t + 1"), Unit::new(-1, 1))
    );
    assert_eq!(
        p("t^2 - 3*t + 1").normalize().unwrap(),
        (p("t^2 - 3*t + 1"), Unit::ONE)
    );
    assert_eq!(p("5*t^7").normalize().unwrap(), (p("5"), Unit::new(1, -7)));
}

#[test]
fn laurent_divexact() {
    let d = p("t^2 - t + 1");
    assert_eq!(
        p("t^4 + t^2 + 1").div_exact(&d).unwrap(),
        Some(p("t^2 + t + 1"))
    );
    assert_eq!(d.div_exact(&d).unwrap(), Some(LaurentPoly::one()));
    assert_eq!(p("t + 1").div_exact(&d).unwrap(), None);
}

#[test]
fn laurent_eval() {
    let d = p("t^2 - t + 1");
    assert_eq!(d.eval_int(1).unwrap(), BigRational::from_integer(1.into()));
    assert_eq!(d.eval_int(-1).unwrap(), BigRational::from_integer(3.into()));
    assert_eq!(
        LaurentPoly::zero().eval_int(5).unwrap(),
        BigRational::from_integer(0.into())
    );
}

#[test]
fn quotient_equality() {
    let m = trefoil_mod();
    let e = |s: &str| m.parse_elem(s).unwrap();
    assert_eq!(e("t^-1"), e("1 - t"));
    assert_eq!(e("2 + t^3"), e("2 + t^3"));
    assert_ne!(e("t"), e("1"));
}

#[test]
fn quotient_invert() {
    let m = trefoil_mod();
    let e = |s: &str| m.parse_elem(s).unwrap();
    assert_eq!(e("1 - t").invert().unwrap().into_solution(), Some(e("t")));
    let other = Modulus::knot(&p("1 - 3*t + t^2")).unwrap();
    assert!(other
        .one()
        .invert()
        .unwrap()
        .into_solution()
        .unwrap()
        .is_one());
    assert!(matches!(
        e("1 + t").invert().unwrap(),
        Solve::NoSolution | Solve::Undetermined { .. }
    ));
}

#[test]
fn quotient_div() {
    let m = trefoil_mod();
    let e = |s: &str| m.parse_elem(s).unwrap();
    match e("1 + t").div_into(&e("3*t")).unwrap() {
        Solve::Solved { x, .. } => {
            assert_eq!(x.clone() * e("1 + t"), e("3*t"));
            assert_eq!(x, e("1 + t"));
        }
        other => panic!("{other:?}"),
    }
    match e("1 - t").div_into(&m.one()).unwrap() {
        Solve::Solved { x, unique } => {
            assert_eq!(x, e("t"));
            assert!(unique);
        }
        other => panic!("{other:?}"),
    }
    let sq = Modulus::general(&p("t^2 - t + 1").pow(2)).unwrap();
    match sq
        .parse_elem("t - 1 + t^-1")
        .unwrap()
        .div_into(&sq.zero())
        .unwrap()
    {
        Solve::Solved { x, unique } => {
            assert!(x.is_zero());
            assert!(!unique);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn quotient_classify() {
    let sq = Modulus::general(&p("t^2 - t + 1").pow(2)).unwrap();
    assert_eq!(
        sq.parse_elem("t - 1 + t^-1").unwrap().classify(),
        Class::ZeroDivisor
    );
    assert_eq!(
        trefoil_mod().parse_elem("1 - t").unwrap().classify(),
        Class::Unit
    );
    let c5 = Modulus::knot(&p("t^4 - t^3 + t^2 - t + 1")).unwrap();
    assert_eq!(
        c5.parse_elem("t^-1 + 2 + t").unwrap().classify(),
        Class::RegularNonunit
    );
    assert_eq!(c5.zero().classify(), Class::Zero);
}

#[test]
fn quotient_conj() {
    let m = trefoil_mod();
    assert_eq!(m.t().conj(), m.parse_elem("1 - t").unwrap());
    assert_eq!(m.constant(7).conj(), m.constant(7));
    let a: QElem = m.parse_elem("3 - 2*t + 5*t^4").unwrap();
    assert_eq!(a.conj().conj(), a);
}

#[test]
fn determinants() {
    let m = PolyMatrix::parse_rows(&[&["1 - t", "t"], &["-1", "1 - t"]]).unwrap();
    assert_eq!(m.det().unwrap(), p("t^2 - t + 1"));
    assert!(PolyMatrix::identity(3).det().unwrap().is_one());
    let f8 = PolyMatrix::parse_rows(&[&["t - 1", "t"], &["-1", "1 - t"]]).unwrap();
    let d = f8.det().unwrap();
    assert_eq!(d, p("-t^2 + 3*t - 1"));
    assert_eq!(d.normalize().unwrap().0, p("t^2 - 3*t + 1"));
}

#[test]
fn adjugates() {
    let m = PolyMatrix::parse_rows(&[&["1 - t", "t"], &["-1", "1 - t"]]).unwrap();
    let expected = PolyMatrix::parse_rows(&[&["1 - t", "-t"], &["1", "1 - t"]]).unwrap();
    assert_eq!(m.adjugate().unwrap(), expected);
    assert_eq!(
        PolyMatrix::identity(3).adjugate().unwrap(),
        PolyMatrix::identity(3)
    );
    let m3 = PolyMatrix::parse_rows(&[
        &["t", "1", "0"],
        &["2", "t^-1", "1 - t"],
        &["0", "3", "t^2"],
    ])
    .unwrap();
    let det = m3.det().unwrap();
    assert_eq!(
        m3.mul(&m3.adjugate().unwrap()).unwrap(),
        PolyMatrix::identity(3).scale(&det)
    );
}

#[test]
fn integer_kernels() {
    assert_eq!(int(&[vec![2, -2]]).kernel(), vec![big(&[1, 1])]);
    assert!(IntMatrix::identity(3).kernel().is_empty());
    let k = int(&[vec![6, 4], vec![3, 2]]).kernel();
    assert_eq!(k.len(), 1);
    assert!(k[0] == big(&[2, -3]) || k[0] == big(&[-2, 3]));
}

#[test]
fn smith_forms() {
    assert_eq!(
        IntMatrix::diagonal(&[2, 3]).smith_normal_form().diagonal,
        big(&[1, 6])
    );
    assert_eq!(
        IntMatrix::zeros(2, 2).smith_normal_form().diagonal,
        big(&[0, 0])
    );
    assert_eq!(
        IntMatrix::diagonal(&[2, 2]).smith_normal_form().diagonal,
        big(&[2, 2])
    );
}

#[test]
fn alexander_from_seifert_matrices() {
    let delta = |rows: &[Vec<i64>]| {
        SeifertData::from_rows(rows)
            .unwrap()
            .modulus()
            .delta()
            .clone()
    };
    assert_eq!(delta(&[vec![-1, 1], vec![0, -1]]), p("t^2 - t + 1"));
    assert_eq!(delta(&[vec![1, 1], vec![0, -1]]), p("t^2 - 3*t + 1"));
    assert_eq!(delta(&[vec![1, 1], vec![0, 1]]), p("t^2 - t + 1"));
}

#[test]
fn trefoil_grams() {
    let s = SeifertData::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
    let m = Arc::clone(s.modulus());
    for (norm, value) in [(Normalization::Raw, "-t"), (Normalization::Symmetric, "-1")] {
        let bl = s.blanchfield_gram(norm).unwrap();
        let cbl = s.cbl_gram(norm).unwrap();
        assert_eq!(bl.get(0, 0), &m.parse_elem(value).unwrap(), "{norm:?}");
        assert_eq!(cbl.get(0, 0), &m.parse_elem(value).unwrap(), "{norm:?}");
        assert!(bl.entries_equal(&cbl));
    }

    let unknot = SeifertData::from_rows(&[]).unwrap();
    assert_eq!(
        unknot
            .blanchfield_gram(Normalization::Symmetric)
            .unwrap()
            .size(),
        0
    );
    assert_eq!(unknot.cbl_gram(Normalization::Symmetric).unwrap().size(), 0);
}

#[test]
fn kappa() {
    let s = SeifertData::from_rows(&[vec![-1, 1], vec![0, -1]]).unwrap();
    let m = s.modulus();
    assert!(s
        .kappa_apply(&[m.zero(), m.zero()])
        .unwrap()
        .iter()
        .all(QElem::is_zero));
    let k = s.kappa_apply(&[m.one(), m.zero()]).unwrap();
    assert_eq!(k, vec![m.parse_elem("1 - t").unwrap(), m.one()]);
    assert!(s.kappa_apply(&[m.one()]).is_err());
}

#[test]
fn pd_parsing() {
    let d: KnotDiagram = "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)"
        .parse()
        .unwrap();
    assert_eq!((d.num_arcs(), d.num_crossings()), (3, 3));
    let signs: Vec<i8> = d.crossings().iter().map(|x| x.sign).collect();
    assert!(signs.iter().all(|&s| s == signs[0]));
    let u = KnotDiagram::unknot();
    assert_eq!((u.num_arcs(), u.num_crossings()), (1, 0));
    assert!("PD[6] X(1,5,2,4,+) X(3,1,4,9,+) X(5,3,6,2,+)"
        .parse::<KnotDiagram>()
        .is_err());
}

#[test]
fn trefoil_weight_gram() {
    let d = KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
    let m = trefoil_mod();
    let basis = coloring_generators(&d, &m).unwrap();
    assert_eq!(basis.len(), 2);
    let q = weight_gram(&d, &basis).unwrap();
    // Q(g, g) = (1 + t)(1 - t)^{-1} Bl(e, e) = (2t - 1)(-t) = 2 - t, up to ±t^k
    let expected = m.parse_elem("2 - t").unwrap();
    let g = q.get(0, 0);
    let unit_multiple =
        |x: &QElem| (-3..=3).any(|k| [1, -1].iter().any(|&s| x.mul_unit(Unit::new(s, k)) == *g));
    assert!(unit_multiple(&expected), "{g}");
    assert!(!unit_multiple(&m.constant(2)));
    let trivial = Modulus::knot(&LaurentPoly::one()).unwrap();
    assert!(coloring_generators(&KnotDiagram::unknot(), &trivial)
        .unwrap()
        .is_empty());
}

#[test]
fn table_alphas() {
    let db = Database::bundled();
    let opts = AnalysisOptions::default();
    for (name, alpha) in [
        ("3_1", "1"),
        ("4_1", "1"),
        ("7_4", "1"),
        ("6_2", "3t^{-1}-7+3t"),
        ("7_7", "t^{-1}-4+t"),
    ] {
        let k = db.knot(name).unwrap();
        let a = analyze(&k, &opts).unwrap();
        let expected = k.modulus().elem(&p(alpha));
        assert!(
            a.alpha().matches(&expected).is_some(),
            "{name}: {}",
            a.alpha().display()
        );
        assert!(a.alpha().self_conjugate);
        assert!(a.diagram_independent());
        assert!(alpha_classify(a.alpha()).recoverable, "{name}");
    }
    let k = db.knot("11_73").unwrap();
    let a = analyze(&k, &opts).unwrap();
    assert!(a.alpha().value().unwrap().is_zero());
    assert!(!a.verdict.recoverable);
}

#[test]
fn database_load_and_reject() {
    assert_eq!(Database::bundled().len(), 20);
    assert!(Database::from_json("").unwrap().is_empty());
    let bad = KnotRecord {
        name: "bad".into(),
        pd: "PD[6] X(1,5,2,4,+) X(3,1,4,6,+) X(5,3,6,2,+)".into(),
        alt_pd: None,
        seifert: vec![vec![1, 1], vec![0, -1]],
        expected_delta: None,
        expected_alpha: None,
        source: String::new(),
        optional: false,
    };
    let db = Database::from_records(vec![bad.clone()]).unwrap();
    let err = db.knot("bad").unwrap_err().to_string();
    assert!(err.contains("invariant"), "{err}");
    assert!(Database::from_records(vec![bad.clone(), bad]).is_err());
}

#[test]
fn pretzel_examples() {
    let d = pretzel_grams(PretzelParams::new(1, 1, 1).unwrap()).unwrap();
    assert_eq!(d.seifert.modulus().delta(), &p("t^2 - t + 1"));
    assert!(d.ratio_holds().unwrap());
    let d = pretzel_grams(PretzelParams::new(3, 5, 7).unwrap()).unwrap();
    assert_eq!(
        d.seifert.modulus().delta(),
        &d.params.delta().normalize().unwrap().0
    );
}

#[test]
fn torus_examples() {
    let params = TorusParams::with_bezout(2, 3, 1, -1).unwrap();
    let m = torus_delta(&params).unwrap();
    assert_eq!(m.delta(), &p("t^2 - t + 1"));
    assert_eq!(
        torus_q_coefficient(&params, &m).unwrap(),
        m.parse_elem("1 + t").unwrap()
    );
    let m34 = torus_delta(&TorusParams::new(3, 4).unwrap()).unwrap();
    assert_eq!(m34.degree(), 6);

    let t = TorusData::new(TorusParams::new(2, 3).unwrap()).unwrap();
    let mono = t.coloring(&t.modulus.zero(), &t.modulus.one()).unwrap();
    assert!(mono.iter().all(QElem::is_one));
    assert!(t.coloring(&t.modulus.one(), &t.modulus.zero()).is_ok());
}

#[test]
fn quandle_examples() {
    let r3 = FiniteAlexanderQuandle::dihedral(3);
    let phi = Cocycle2::from_psi(r3, &Bilinear::product(3, 1)).unwrap();
    assert!(phi.check().is_ok());
    assert!(Cocycle2::zero(r3).check().is_ok());
    let zero = Cocycle2::from_psi(r3, &Bilinear::zero(3)).unwrap();
    assert!((0..3).all(|x| (0..3).all(|y| zero.eval(x, y) == 0)));

    let d = KnotDiagram::from_knotinfo(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
    let inv = cocycle_invariant(&d, &phi, Enumeration::BruteForce).unwrap();
    assert_eq!(inv.values().sum::<usize>(), 9);
    assert_eq!(
        inv,
        cocycle_invariant(&d, &phi, Enumeration::Linear).unwrap()
    );

    assert!(quandle_h2(&FiniteAlexanderQuandle::new(1, 0).unwrap()).is_empty());
}
