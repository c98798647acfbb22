//! Randomized checks that scalar arithmetic really is a field with the
//! expected canonical forms.

use proptest::prelude::*;
use ynq_exact::{rat_frac, CycloField, LaurentPoly, Scalar, Specialization};

fn arb_scalar(order: u64) -> impl Strategy<Value = Scalar> {
    // Small Laurent polynomials and ratios of them.
    let coeff = (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat_frac(n, d));
    let term = (-3i64..=3, coeff);
    let poly = prop::collection::vec(term, 0..4);
    (poly.clone(), poly).prop_map(move |(np, dp)| {
        let f = CycloField::new(order);
        let mk = |terms: Vec<(i64, ynq_exact::Rat)>| {
            let ts: Vec<_> = terms
                .into_iter()
                .map(|(k, c)| (k, f.from_rat(c)))
                .collect();
            LaurentPoly::from_terms(&f, &ts)
        };
        let num = mk(np);
        let den = mk(dp);
        if den.is_zero() {
            Scalar::from_laurent(num)
        } else {
            Scalar::from_ratio(num, den)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_scalar(4), b in arb_scalar(4), c in arb_scalar(4)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn subtraction_and_division_invert(a in arb_scalar(4), b in arb_scalar(4)) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn canonical_form(a in arb_scalar(4)) {
        // Denominator monic with nonzero constant term and coprime to the
        // numerator; zero has denominator one.
        let den = a.den();
        prop_assert!(!den.is_zero());
        prop_assert_eq!(den.low(), 0);
        prop_assert!(den.leading_coeff().is_one());
        if a.is_zero() {
            prop_assert!(den.is_one());
        } else {
            let num_poly = a.num().shift(-a.num().low());
            let g = num_poly.gcd_poly(den);
            prop_assert!(g.is_one(), "numerator and denominator share {}", g);
        }
    }

    #[test]
    fn bar_involution_is_ring_involution(a in arb_scalar(4), b in arb_scalar(4)) {
        prop_assert_eq!(a.bar_involution().bar_involution(), a.clone());
        prop_assert_eq!(a.add(&b).bar_involution(), a.bar_involution().add(&b.bar_involution()));
        prop_assert_eq!(a.mul(&b).bar_involution(), a.bar_involution().mul(&b.bar_involution()));
    }

    #[test]
    fn specialization_is_multiplicative(a in arb_scalar(4), b in arb_scalar(4)) {
        let spec = Specialization::Root(4);
        let sa = spec.apply(&a);
        let sb = spec.apply(&b);
        let sab = spec.apply(&a.mul(&b));
        if let (Ok(sa), Ok(sb), Ok(sab)) = (sa, sb, sab) {
            prop_assert_eq!(sa.mul(&sb), sab);
        }
    }

    #[test]
    fn serialization_round_trips(a in arb_scalar(12)) {
        let f = CycloField::new(12);
        let repr = a.to_repr();
        let json = serde_json::to_string(&repr).unwrap();
        let back: ynq_exact::serial::ScalarRepr = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(Scalar::from_repr(&f, &back).unwrap(), a);
    }
}
