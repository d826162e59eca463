//! Cross-module invariants: field axioms, canonical-form determinism,
//! complement involutions, the covering-map identities, and exact/float
//! agreement on the catalog groups.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbiform::catalog::{self, CatalogId};
use orbiform::group::{isomorphic, sl2_table, FiniteGroup};
use orbiform::numeric::{Backend, Matrix, Scalar, Subspace, DEFAULT_TOLERANCE};
use orbiform::quaternion::{lift_so4, orbit_angle_spectrum, phi, QuaternionGroup};
use orbiform::strata;

const TOL: f64 = DEFAULT_TOLERANCE;

fn small_rat() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=12)
}

fn sqrt5_scalar() -> impl Strategy<Value = Scalar> {
    (small_rat(), small_rat()).prop_map(|((an, ad), (bn, bd))| Scalar::sqrt5_ratio(an, ad, bn, bd))
}

proptest! {
    #[test]
    fn qsqrt5_field_axioms(x in sqrt5_scalar(), y in sqrt5_scalar(), z in sqrt5_scalar()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inv(), Scalar::one(Backend::QSqrt5));
        }
    }

    #[test]
    fn squares_have_field_roots(x in sqrt5_scalar()) {
        let sq = &x * &x;
        let r = sq.sqrt_in_field().expect("squares have roots in the field");
        prop_assert_eq!(&r * &r, sq);
        prop_assert!(r.sign() != std::cmp::Ordering::Less);
    }

    #[test]
    fn complement_involution(rows in proptest::collection::vec(
        proptest::collection::vec(-4i64..=4, 5), 1..4)) {
        let b = Backend::Rational;
        let rows: Vec<Vec<Scalar>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| Scalar::from_int(v, b)).collect())
            .collect();
        let s = Subspace::span(5, b, rows, TOL).unwrap();
        let c = s.orthogonal_complement(TOL).unwrap();
        prop_assert_eq!(s.dim() + c.dim(), 5);
        prop_assert!(s.intersect(&c, TOL).unwrap().is_zero());
        let back = c.orthogonal_complement(TOL).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn intersection_dimension_bound(a in proptest::collection::vec(
        proptest::collection::vec(-3i64..=3, 4), 1..4),
        b in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 4), 1..4)) {
        let bk = Backend::Rational;
        let mk = |rows: Vec<Vec<i64>>| {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| Scalar::from_int(v, bk)).collect())
                .collect();
            Subspace::span(4, bk, rows, TOL).unwrap()
        };
        let s1 = mk(a);
        let s2 = mk(b);
        let meet = s1.intersect(&s2, TOL).unwrap();
        let lower = (s1.dim() + s2.dim()).saturating_sub(4);
        prop_assert!(meet.dim() >= lower);
        prop_assert!(meet.dim() <= s1.dim().min(s2.dim()));
    }
}

/// Canonicality: every spanning set of the same subspace reduces to the
/// identical `Subspace` value (exact backend, exact equality).
#[test]
fn canonical_form_is_spanning_set_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let b = Backend::QSqrt5;
    for _ in 0..20 {
        let n = rng.gen_range(3..=6usize);
        let dim = rng.gen_range(1..n);
        let base: Vec<Vec<Scalar>> = (0..dim)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let tau = Scalar::golden_ratio(b);
                        let c = Scalar::from_int(rng.gen_range(-2i64..=2), b);
                        let d = Scalar::from_int(rng.gen_range(-2i64..=2), b);
                        &c + &(&d * &tau)
                    })
                    .collect()
            })
            .collect();
        let reference = Subspace::span(n, b, base.clone(), TOL).unwrap();
        for _ in 0..5 {
            // random invertible integer combinations of the base rows
            let mut rows = Vec::new();
            for _ in 0..dim + rng.gen_range(0..2) {
                let mut v = vec![Scalar::zero(b); n];
                for base_row in &base {
                    let c = Scalar::from_int(rng.gen_range(-3i64..=3), b);
                    for (vi, bi) in v.iter_mut().zip(base_row) {
                        *vi = &*vi + &(&c * bi);
                    }
                }
                rows.push(v);
            }
            let again = Subspace::span(n, b, rows, TOL).unwrap();
            if again.dim() == reference.dim() {
                assert_eq!(again, reference, "canonical form changed");
            }
        }
    }
}

/// `dim ker(g − I) + rank(g − I) = n` for every element of a catalog group.
#[test]
fn rank_nullity_on_group_elements() {
    let g = catalog::build(&CatalogId::Poincare)
        .unwrap()
        .expect_matrix()
        .unwrap();
    let id = Matrix::identity(4, g.backend());
    for i in 0..g.order() {
        let diff = g.element(i).sub(&id);
        let kernel = Subspace::kernel(&diff, TOL).unwrap();
        let row_space = Subspace::span(
            4,
            g.backend(),
            diff.rows().map(|r| r.to_vec()).collect(),
            TOL,
        )
        .unwrap();
        assert_eq!(kernel.dim() + row_space.dim(), 4);
    }
}

/// φ is a homomorphism and exactly two-to-one on 1000 random icosian pairs.
#[test]
fn phi_homomorphism_and_two_to_one() {
    let icosians = catalog::icosians();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let l1 = &icosians[rng.gen_range(0..120)];
        let r1 = &icosians[rng.gen_range(0..120)];
        let l2 = &icosians[rng.gen_range(0..120)];
        let r2 = &icosians[rng.gen_range(0..120)];
        let lhs = phi(&l1.mul(l2), &r1.mul(r2));
        let rhs = phi(l1, r1).mul(&phi(l2, r2));
        assert_eq!(lhs, rhs, "phi is not multiplicative");
    }
    for _ in 0..200 {
        let l = &icosians[rng.gen_range(0..120)];
        let r = &icosians[rng.gen_range(0..120)];
        let m = phi(l, r);
        assert_eq!(m, phi(&l.neg(), &r.neg()));
        // a different pair from the same fibre must be the negated one
        let l2 = &icosians[rng.gen_range(0..120)];
        let r2 = &icosians[rng.gen_range(0..120)];
        if phi(l2, r2) == m {
            let same = l2.approx_eq(l, TOL) && r2.approx_eq(r, TOL);
            let negated = l2.approx_eq(&l.neg(), TOL) && r2.approx_eq(&r.neg(), TOL);
            assert!(same || negated, "fibre of phi has more than two points");
        }
    }
}

/// `phi(lift_so4(g)) = g` across the catalog SO(4) groups. Lifts whose
/// normalizing square root leaves the exact field (e.g. the √2/2 components
/// over the rational backend) fall back to floats, as the group lift does.
#[test]
fn lift_round_trip_on_catalog_groups() {
    for expr in ["poincare", "binary_t", "klein_four", "ps_product(4,4)", "binary_o"] {
        let g = catalog::build(&expr.parse::<CatalogId>().unwrap())
            .unwrap()
            .expect_matrix()
            .unwrap();
        for i in 0..g.order() {
            let m = g.element(i);
            match lift_so4(m, g.tolerance()) {
                Ok((l, r)) => assert!(
                    phi(&l, &r).approx_eq(m, 1e-9),
                    "round trip failed in {expr} at element {i}"
                ),
                Err(orbiform::error::Error::NoFieldSqrt) => {
                    let mf = m.convert(Backend::Float64);
                    let (l, r) = lift_so4(&mf, 1e-8).unwrap();
                    assert!(
                        phi(&l, &r).approx_eq(&mf, 1e-7),
                        "float round trip failed in {expr} at element {i}"
                    );
                }
                Err(other) => panic!("unexpected lift error in {expr}: {other:?}"),
            }
        }
    }
}

/// Fix is equivariant: `Fix(hgh⁻¹) = h·Fix(g)`.
#[test]
fn fixed_spaces_are_conjugation_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for expr in ["klein_four", "ps_product(4,4)", "sum(poincare,trivial(1))"] {
        let g = catalog::build(&expr.parse::<CatalogId>().unwrap())
            .unwrap()
            .expect_matrix()
            .unwrap();
        for _ in 0..50 {
            let i = rng.gen_range(0..g.order());
            let h = rng.gen_range(0..g.order());
            let conj = g.mul(h, g.mul(i, g.inv(h)));
            let lhs = g.fixed_space(conj).unwrap();
            let rhs = g
                .fixed_space(i)
                .unwrap()
                .map_by(g.element(h), g.tolerance())
                .unwrap();
            assert!(lhs.approx_eq(&rhs, g.tolerance()), "equivariance in {expr}");
        }
    }
}

/// Maximal strata are equivariant: `g·L ∈ 𝔏_max` with `F(gL) = g F(L) g⁻¹`.
#[test]
fn strata_are_equivariant() {
    let g = catalog::build(&"ps_product(4,4)".parse::<CatalogId>().unwrap())
        .unwrap()
        .expect_matrix()
        .unwrap();
    let entries = strata::maximal_subspaces(&g).unwrap();
    for h in 0..g.order() {
        for e in &entries {
            let moved = e.subspace.map_by(g.element(h), TOL).unwrap();
            let target = entries
                .iter()
                .find(|e2| e2.subspace.approx_eq(&moved, TOL))
                .expect("translated maximal subspace stays maximal");
            let conjugated: Vec<usize> = e
                .group
                .iter()
                .map(|i| g.mul(h, g.mul(i, g.inv(h))))
                .collect();
            let mut sorted: Vec<usize> = conjugated;
            sorted.sort_unstable();
            let expect: Vec<usize> = target.group.iter().collect();
            assert_eq!(sorted, expect, "F(gL) != gF(L)g^-1");
        }
    }
}

/// Exact/float agreement: all fixed-space dimensions match between the
/// exact build and its float image at ε = 1e−8.
#[test]
fn exact_and_float_subspace_dimensions_agree() {
    for expr in ["poincare", "binary_t", "klein_four", "ps_product(4,4)"] {
        let g = catalog::build(&expr.parse::<CatalogId>().unwrap())
            .unwrap()
            .expect_matrix()
            .unwrap();
        let f = g.to_float(1e-8).unwrap();
        for i in 0..g.order() {
            assert_eq!(
                g.fixed_space(i).unwrap().dim(),
                f.fixed_space(i).unwrap().dim(),
                "dimension drift in {expr} at element {i}"
            );
        }
        // verdicts agree as well
        let ve = orbiform::recognize::decide(&g).unwrap();
        let vf = orbiform::recognize::decide(&f).unwrap();
        assert!(ve.same_outcome(&vf), "float verdict drifted for {expr}");
    }
}

/// `isomorphic` behaves as an equivalence relation across the catalog:
/// reflexive everywhere, symmetric on 20 random pairs, transitive on 10
/// random triples (with conjugated copies providing nontrivial positives).
#[test]
fn isomorphism_is_an_equivalence_relation() {
    let matrix = |expr: &str| -> Box<dyn FiniteGroup> {
        Box::new(
            catalog::build(&expr.parse::<CatalogId>().unwrap())
                .unwrap()
                .expect_matrix()
                .unwrap(),
        )
    };
    let pool: Vec<Box<dyn FiniteGroup>> = vec![
        matrix("poincare"),
        matrix("conj(poincare,17)"),
        Box::new(sl2_table(5).unwrap()),
        matrix("binary_t"),
        matrix("conj(binary_t,23)"),
        Box::new(sl2_table(3).unwrap()),
        matrix("klein_four"),
        matrix("ps_product(4,4)"),
        matrix("cyclic(4)"),
        Box::new(sl2_table(7).unwrap()),
    ];
    for g in &pool {
        assert!(isomorphic(g.as_ref(), g.as_ref()).unwrap(), "reflexivity");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..20 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        assert_eq!(
            isomorphic(a.as_ref(), b.as_ref()).unwrap(),
            isomorphic(b.as_ref(), a.as_ref()).unwrap(),
            "symmetry"
        );
    }
    for _ in 0..10 {
        let a = &pool[rng.gen_range(0..pool.len())];
        let b = &pool[rng.gen_range(0..pool.len())];
        let c = &pool[rng.gen_range(0..pool.len())];
        if isomorphic(a.as_ref(), b.as_ref()).unwrap()
            && isomorphic(b.as_ref(), c.as_ref()).unwrap()
        {
            assert!(isomorphic(a.as_ref(), c.as_ref()).unwrap(), "transitivity");
        }
    }
    // the nontrivial positives really are positive
    assert!(isomorphic(pool[0].as_ref(), pool[1].as_ref()).unwrap());
    assert!(isomorphic(pool[1].as_ref(), pool[2].as_ref()).unwrap());
    assert!(isomorphic(pool[3].as_ref(), pool[5].as_ref()).unwrap());
}

/// `|Γ| = ½|L||R_K| = ½|R||L_K|` with `−1 ∈ L, R` across the catalog SO(4)
/// groups.
#[test]
fn lift_order_formula_on_catalog_so4_groups() {
    for expr in ["poincare", "binary_t", "klein_four", "ps_product(4,4)", "binary_o"] {
        let g = catalog::build(&expr.parse::<CatalogId>().unwrap())
            .unwrap()
            .expect_matrix()
            .unwrap();
        let data = orbiform::quaternion::lift_group(&g).unwrap();
        assert!(data.order_formula_holds(), "order formula in {expr}");
        let backend = data.left.elements()[0].backend();
        let minus_one = orbiform::quaternion::UnitQuaternion::one(backend).neg();
        assert!(data.left.position(&minus_one).is_some(), "-1 in L for {expr}");
        assert!(data.right.position(&minus_one).is_some(), "-1 in R for {expr}");
    }
}

/// Spectrum counts always sum to the group order.
#[test]
fn spectrum_counts_sum_to_order() {
    for qset in [catalog::hurwitz_units(), catalog::icosians()] {
        let h = QuaternionGroup::from_elements(qset, TOL).unwrap();
        let s = orbit_angle_spectrum(&h);
        assert_eq!(s.total(), h.order());
        // cosines are strictly decreasing, hence distinct
        for w in s.entries.windows(2) {
            assert!(w[0].0.to_f64() > w[1].0.to_f64());
        }
    }
}

/// Deterministic pipeline: two independent builds and analyses of the same
/// catalog id agree element-by-element and verdict-by-verdict.
#[test]
fn repeated_builds_are_identical() {
    let id: CatalogId = "conj(sum(poincare,trivial(1)),5)".parse().unwrap();
    let a = catalog::build(&id).unwrap().expect_matrix().unwrap();
    let b = catalog::build(&id).unwrap().expect_matrix().unwrap();
    assert_eq!(a.order(), b.order());
    for i in 0..a.order() {
        assert_eq!(a.element(i), b.element(i));
    }
    let va = orbiform::recognize::decide(&a).unwrap();
    let vb = orbiform::recognize::decide(&b).unwrap();
    assert!(va.same_outcome(&vb));
}
