//! Randomized invariants: series inversion, Gröbner determinism and
//! reduction properties, ideal and subalgebra membership closure, and the
//! induction identities on partitions.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use walg::orbits::{induce, orbit_profile, LeviDescriptor, Partition};
use walg::poly::{
    groebner, normal_form, subalgebra_contains, MonomialOrder, MultiPoly, TruncSeries,
};

type Rat = BigRational;

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn vars2() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

/// Polynomial in two variables: up to 4 terms, exponents <= 3, small
/// nonzero integer coefficients.
fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), -4i64..=4), 1..=4).prop_map(|terms| {
        let v = vars2();
        MultiPoly::from_terms(
            &v,
            terms
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((a, b), c)| (vec![a, b], rat(c))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_inverse_cancels(coeffs in prop::collection::vec(poly_strategy(), 1..=6)) {
        let v = vars2();
        let order = coeffs.len();
        let mut s = TruncSeries::one(&v, order);
        for (r, c) in coeffs.into_iter().enumerate() {
            s.set_coeff(r + 1, c);
        }
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv), TruncSeries::one(&v, order));
    }

    #[test]
    fn groebner_is_permutation_invariant(
        f in nonzero_poly(),
        g in nonzero_poly(),
        h in nonzero_poly(),
    ) {
        let order = MonomialOrder::DegRevLex;
        let a = groebner(&[f.clone(), g.clone(), h.clone()], order.clone()).unwrap();
        let b = groebner(&[h, f, g], order).unwrap();
        prop_assert_eq!(a.elements(), b.elements());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        f in nonzero_poly(),
        g in nonzero_poly(),
        t in poly_strategy(),
    ) {
        let gb = groebner(&[f, g], MonomialOrder::DegRevLex).unwrap();
        let nf = normal_form(&t, &gb).unwrap();
        prop_assert_eq!(&normal_form(&nf, &gb).unwrap(), &nf);
        // t - nf(t) lies in the ideal
        prop_assert!(gb.contains(&t.sub(&nf)).unwrap());
    }

    #[test]
    fn ideal_membership_of_combinations(
        f in nonzero_poly(),
        g in nonzero_poly(),
        a in poly_strategy(),
        b in poly_strategy(),
    ) {
        let gb = groebner(&[f.clone(), g.clone()], MonomialOrder::DegRevLex).unwrap();
        let combo = a.mul(&f).add(&b.mul(&g));
        prop_assert!(gb.contains(&combo).unwrap());
    }

    #[test]
    fn subalgebra_is_closed_under_polynomials(
        f in nonzero_poly(),
        g in nonzero_poly(),
        c in -3i64..=3,
    ) {
        // any polynomial expression in the generators is a member
        let expr = f.mul(&g).add(&f.scale(&rat(c))).add(&g.pow(2));
        let gens = [f, g];
        prop_assert!(subalgebra_contains(&expr, &gens).unwrap());
    }

    #[test]
    fn induction_codimension_and_richardson(
        blocks in prop::collection::vec(1u32..=4, 1..=4),
        picks in prop::collection::vec(0usize..1000, 1..=4),
    ) {
        prop_assume!(blocks.len() == picks.len());
        let levi = LeviDescriptor::new(&blocks).unwrap();
        let orbits: Vec<Partition> = levi
            .blocks()
            .iter()
            .zip(&picks)
            .map(|(&b, &k)| {
                let all = Partition::all(b);
                all[k % all.len()].clone()
            })
            .collect();
        let ind = induce(&levi, &orbits).unwrap();
        let r_sum: u32 = orbits.iter().map(|o| orbit_profile(o).r).sum();
        prop_assert_eq!(orbit_profile(&ind).r, r_sum);
        prop_assert_eq!(ind.n(), levi.n());
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(1u32..=6, 0..=6)) {
        let lam = Partition::from_unsorted(&parts);
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }
}
