//! Randomized invariants: ring axioms, grammar round-trips, Pieri box
//! oracle, Littlewood–Richardson sanity, and certifier covariance.

use num_traits::Signed;
use proptest::prelude::*;

use schurpos::partition::partitions_of;
use schurpos::poly::{Coeff, Monomial, Poly, Variable};
use schurpos::schur::dualize;
use schurpos::{
    certify_expansion, certify_seg_polynomial, expand_to_schur, parse_expr, schur_multiply,
    Partition, PositivityVerdict, SchurExpansion,
};

fn arb_partition(max_weight: u32) -> impl Strategy<Value = Partition> {
    (1..=max_weight).prop_flat_map(|w| {
        let pool = partitions_of(w, None, None);
        (0..pool.len()).prop_map(move |i| pool[i].clone())
    })
}

fn arb_expansion(weight: u32) -> impl Strategy<Value = SchurExpansion> {
    let pool = partitions_of(weight, None, None);
    let n = pool.len();
    proptest::collection::vec(-9i64..=9, n).prop_map(move |coeffs| {
        let mut e = SchurExpansion::new();
        for (part, c) in pool.iter().zip(coeffs) {
            e.add_term(part.clone(), Coeff::from(c));
        }
        if e.is_empty() {
            e.add_term(pool[0].clone(), Coeff::from(1));
        }
        e
    })
}

fn arb_seg_poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    let term = (
        -5i64..=5,
        proptest::collection::vec((1u32..=4, 1u32..=2), 0..3),
    );
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        let mut p = Poly::zero();
        for (c, factors) in terms {
            let mut m = Monomial::one();
            for (i, e) in factors {
                m = m.mul(&Monomial::var(Variable::seg(i), e));
            }
            if m.degree() <= max_deg {
                p.add_term(m, Coeff::from(c));
            }
        }
        p
    })
}

/// Monomials in the S_i variables of total degree exactly `d` correspond to
/// partitions of `d`, which makes homogeneity hold by construction.
fn arb_homogeneous_seg_poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    (1..=max_deg).prop_flat_map(|d| {
        let pool = partitions_of(d, None, None);
        let n = pool.len();
        proptest::collection::vec(-5i64..=5, n).prop_map(move |coeffs| {
            let mut p = Poly::zero();
            for (part, c) in pool.iter().zip(coeffs) {
                let mut m = Monomial::one();
                for &row in part.parts() {
                    m = m.mul(&Monomial::var(Variable::seg(row), 1));
                }
                p.add_term(m, Coeff::from(c));
            }
            p
        })
    })
}

/// Pieri: S_I * S_(k) = sum over ways of adding k boxes, no two in a column.
fn pieri_row(i: &Partition, k: u32) -> SchurExpansion {
    let mut dec = i.decreasing();
    dec.push(0);
    let mut out = SchurExpansion::new();
    // choose how many boxes go to each row of the result; row p of the
    // result may exceed row p of I by any amount but not exceed row p-1 of I
    fn go(dec: &[u32], row: usize, left: u32, acc: &mut Vec<u32>, out: &mut SchurExpansion) {
        if row == dec.len() {
            if left == 0 {
                let parts: Vec<u32> = acc.iter().copied().filter(|&x| x > 0).collect();
                out.add_term(Partition::new(parts), Coeff::from(1));
            }
            return;
        }
        let ceiling = if row == 0 { dec[0] + left } else { dec[row - 1] };
        let base = dec[row];
        for new_len in base..=ceiling.min(base + left) {
            acc.push(new_len);
            go(dec, row + 1, left - (new_len - base), acc, out);
            acc.pop();
        }
    }
    go(&dec, 0, k, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn poly_ring_axioms(a in arb_seg_poly(8), b in arb_seg_poly(8), c in arb_seg_poly(8)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.sub(&a), Poly::zero());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
        prop_assert_eq!(a.mul(&Poly::zero()), Poly::zero());
    }

    #[test]
    fn expansion_print_parse_roundtrip(w in 1u32..=6, seed in any::<u64>()) {
        let pool = partitions_of(w, None, None);
        let mut e = SchurExpansion::new();
        let mut s = seed;
        for part in &pool {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let c = ((s >> 33) % 21) as i64 - 10;
            e.add_term(part.clone(), Coeff::from(c));
        }
        if e.is_empty() {
            e.add_term(pool[0].clone(), Coeff::from(3));
        }
        let printed = e.to_string();
        let back = parse_expr(&printed).unwrap().as_linear_schur().unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn pieri_box_oracle(i in arb_partition(5), k in 1u32..=3) {
        let row = SchurExpansion::single(Partition::new(vec![k]), Coeff::from(1));
        let single = SchurExpansion::single(i.clone(), Coeff::from(1));
        prop_assert_eq!(schur_multiply(&single, &row), pieri_row(&i, k));
    }

    #[test]
    fn schur_multiply_commutes(a in arb_expansion(3), b in arb_expansion(4)) {
        prop_assert_eq!(schur_multiply(&a, &b), schur_multiply(&b, &a));
    }

    #[test]
    fn schur_multiply_associates(a in arb_partition(3), b in arb_partition(3), c in arb_partition(3)) {
        let (a, b, c) = (
            SchurExpansion::single(a, Coeff::from(1)),
            SchurExpansion::single(b, Coeff::from(1)),
            SchurExpansion::single(c, Coeff::from(1)),
        );
        prop_assert_eq!(
            schur_multiply(&schur_multiply(&a, &b), &c),
            schur_multiply(&a, &schur_multiply(&b, &c))
        );
    }

    #[test]
    fn product_coefficients_nonnegative(a in arb_partition(4), b in arb_partition(4)) {
        let prod = schur_multiply(
            &SchurExpansion::single(a, Coeff::from(1)),
            &SchurExpansion::single(b, Coeff::from(1)),
        );
        for (part, coeff) in prod.iter() {
            prop_assert!(!coeff.is_negative(), "negative at {}", part);
        }
    }

    #[test]
    fn dualize_is_ring_homomorphism(a in arb_expansion(3), b in arb_expansion(4)) {
        prop_assert_eq!(
            dualize(&schur_multiply(&a, &b)),
            schur_multiply(&dualize(&a), &dualize(&b))
        );
    }

    #[test]
    fn expand_inverts_evaluation(e in (1u32..=6).prop_flat_map(arb_expansion)) {
        let back = expand_to_schur(&e.to_seg_polynomial(), None).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn certify_basis_invariance(p in arb_homogeneous_seg_poly(6)) {
        let via_seg = certify_seg_polynomial(&p, None).unwrap();
        let via_exp = certify_expansion(&expand_to_schur(&p, None).unwrap(), None);
        prop_assert_eq!(via_seg, via_exp);
    }

    #[test]
    fn certify_scale_covariance(e in arb_expansion(4), k in 1i64..=7) {
        let verdict = certify_expansion(&e, None);
        let scaled = certify_expansion(&e.scale(&Coeff::from(k)), None);
        prop_assert_eq!(verdict.is_positive(), scaled.is_positive());
        if verdict.is_positive() {
            let flipped = certify_expansion(&e.scale(&Coeff::from(-1)), None);
            let is_flipped = matches!(flipped, PositivityVerdict::NotPositive { .. });
            prop_assert!(is_flipped);
        }
    }
}
