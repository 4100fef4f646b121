//! Expansion of symmetric polynomials into the Schur basis and
//! multiplication within it.
//!
//! Every conversion goes through leading-term elimination against a
//! unitriangular transition: the determinant polynomial of a basis element
//! contains its own index partition as a monomial with coefficient one, and
//! otherwise only partitions strictly above it in dominance order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{Coeff, Monomial, Poly, VarKind, Variable};
use crate::schur;

/// A homogeneous integer linear combination of Schur basis elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn unit() -> Self {
        let mut e = SchurExpansion::new();
        e.add_term(Partition::empty(), Coeff::one());
        e
    }

    pub fn single(part: Partition, coeff: Coeff) -> Self {
        let mut e = SchurExpansion::new();
        e.add_term(part, coeff);
        e
    }

    pub fn add_term(&mut self, part: Partition, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(part) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in other.iter() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Coeff) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        if k.is_zero() {
            return out;
        }
        for (p, c) in self.iter() {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, part: &Partition) -> Coeff {
        self.coeffs.get(part).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates keys in ascending partition order; printing reverses this
    /// to get the dominance-descending convention.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn coefficient_sum(&self) -> Coeff {
        self.coeffs.values().sum()
    }

    /// Common weight of the keys; `None` for mixed weights, `Some(0)` when
    /// empty.
    pub fn degree(&self) -> Option<u32> {
        let mut deg = None;
        for p in self.coeffs.keys() {
            match deg {
                None => deg = Some(p.weight()),
                Some(d) if d != p.weight() => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    /// Keeps only partitions fitting the `(m,n)` hook; the discarded basis
    /// elements vanish identically at those ranks.
    pub fn truncate_to_hook(&self, m: usize, n: usize) -> SchurExpansion {
        let mut out = SchurExpansion::new();
        for (p, c) in self.iter() {
            if p.fits_hook(m, n) {
                out.add_term(p.clone(), c.clone());
            }
        }
        out
    }

    /// The expansion as a polynomial in Segre variables via the defining
    /// determinants.
    pub fn to_seg_polynomial(&self) -> Poly {
        let mut out = Poly::zero();
        for (p, c) in self.iter() {
            out = out.add(&schur_in_seg(p).scale(c));
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    /// `24*S[4] + 26*S[1,3] + ...` in dominance-descending key order, unit
    /// coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{}", p.bracket())?;
            } else {
                write!(f, "{}*{}", mag, p.bracket())?;
            }
        }
        Ok(())
    }
}

/// The determinant polynomial of `S_I` in the Segre variables `S[k]`.
pub fn schur_in_seg(i: &Partition) -> Poly {
    let l = i.len() as u32;
    let target = i.weight() + l * l; // entries are independent variables; no pruning wanted
    determinant_in_vars(i.parts(), target, |k| Variable::seg(k as u32))
}

/// The determinant polynomial of the classical `S_I` in the variables
/// `c[k] = e_k`, truncated at rank `m` (`c[k] = 0` for `k > m`): the dual
/// determinant on the conjugate partition.
pub fn schur_in_chern_classes(i: &Partition, m: usize) -> Poly {
    let conj = i.conjugate();
    let l = conj.len() as u32;
    let target = conj.weight() + l * l;
    let p = determinant_in_vars(conj.parts(), target, |k| Variable::c(k as u32));
    // rank truncation
    let mut out = Poly::zero();
    for (mono, c) in p.terms() {
        if mono.factors().iter().all(|(v, _)| v.index as usize <= m) {
            out.add_term(mono.clone(), c.clone());
        }
    }
    out
}

fn determinant_in_vars(parts: &[u32], target: u32, var: impl Fn(usize) -> Variable) -> Poly {
    schur::determinant_by_minors(parts, target, |k| Poly::var(var(k)))
}

/// Maps a monomial in Segre variables to the partition of its indices:
/// `S[1]*S[2]^2 -> (1,2,2)`.
fn seg_monomial_partition(m: &Monomial) -> Option<Partition> {
    let mut parts = Vec::new();
    for (v, e) in m.factors() {
        if v.kind != VarKind::Seg {
            return None;
        }
        for _ in 0..*e {
            parts.push(v.index);
        }
    }
    Some(Partition::new(parts))
}

fn chern_monomial_partition(m: &Monomial) -> Option<Partition> {
    let mut parts = Vec::new();
    for (v, e) in m.factors() {
        if v.kind != VarKind::C {
            return None;
        }
        for _ in 0..*e {
            parts.push(v.index);
        }
    }
    Some(Partition::new(parts))
}

/// Expands a homogeneous polynomial in Segre variables into the Schur
/// basis. The transition is unitriangular against dominance, so repeatedly
/// stripping the dominance-minimal monomial terminates with the unique
/// expansion.
pub fn expand_to_schur(p: &Poly, rank_hint: Option<(usize, usize)>) -> Result<SchurExpansion, Error> {
    if !p.vars_all(|v| v.kind == VarKind::Seg) {
        return Err(Error::WrongVariables {
            expected: "Segre (S[i])".to_string(),
            found: "other".to_string(),
        });
    }
    if p.homogeneous_degree().is_none() {
        return Err(Error::NonHomogeneous);
    }
    let expansion = eliminate(p, seg_monomial_partition, |part| schur_in_seg(part))?;
    Ok(match rank_hint {
        Some((m, n)) => expansion.truncate_to_hook(m, n),
        None => expansion,
    })
}

/// Shared unitriangular elimination: `key` reads a partition off a monomial
/// and `image(lambda)` is the basis polynomial with pivot `lambda`.
fn eliminate(
    p: &Poly,
    key: impl Fn(&Monomial) -> Option<Partition>,
    image: impl Fn(&Partition) -> Poly,
) -> Result<SchurExpansion, Error> {
    let mut rest = p.clone();
    let mut out = SchurExpansion::new();
    while !rest.is_zero() {
        // dominance-minimal pivot = minimal in the partition total order
        let (pivot, coeff) = rest
            .terms()
            .map(|(m, c)| (key(m).expect("variables checked"), c.clone()))
            .min_by(|(a, _), (b, _)| a.cmp(b))
            .expect("nonzero polynomial");
        rest = rest.sub(&image(&pivot).scale(&coeff));
        out.add_term(pivot, coeff);
    }
    Ok(out)
}

/// Product in the Schur basis: both factors are rewritten as Segre-variable
/// polynomials, multiplied exactly, and expanded back. The structure
/// constants are the Littlewood-Richardson numbers.
pub fn schur_multiply(a: &SchurExpansion, b: &SchurExpansion) -> SchurExpansion {
    let pa = a.to_seg_polynomial();
    let pb = b.to_seg_polynomial();
    expand_to_schur(&pa.mul(&pb), None).expect("products of Segre polynomials stay expandable")
}

/// Expands a symmetric homogeneous polynomial in the roots `a1..am` into
/// classical Schur polynomials of that alphabet. Partitions with more than
/// `m` parts cannot occur (their Schur polynomials vanish).
pub fn expand_root_polynomial(q: &Poly, rank: usize) -> Result<SchurExpansion, Error> {
    if !q.vars_all(|v| v.kind == VarKind::RootA && v.index as usize <= rank) {
        return Err(Error::WrongVariables {
            expected: format!("roots a1..a{rank}"),
            found: "other".to_string(),
        });
    }
    if q.homogeneous_degree().is_none() {
        return Err(Error::NonHomogeneous);
    }
    let vars: Vec<Variable> = (1..=rank as u32).map(Variable::root_a).collect();
    let pair = schur::VirtualPair::new(schur::BundleSpec::a_roots(rank), schur::BundleSpec::empty());
    let mut rest = q.clone();
    let mut out = SchurExpansion::new();
    while !rest.is_zero() {
        // lex-leading exponent vector; symmetry makes it weakly decreasing
        let mut best: Option<(Vec<u32>, Coeff)> = None;
        for (m, c) in rest.terms() {
            let key: Vec<u32> = vars.iter().map(|v| m.exponent_of(*v)).collect();
            if best.as_ref().map_or(true, |(bk, _)| key > *bk) {
                best = Some((key, c.clone()));
            }
        }
        let (exps, coeff) = best.unwrap();
        for w in 0..exps.len().saturating_sub(1) {
            if exps[w] < exps[w + 1] {
                return Err(Error::NotSymmetric {
                    a: vars[w].to_string(),
                    b: vars[w + 1].to_string(),
                });
            }
        }
        let lambda = Partition::new(exps);
        rest = rest.sub(&schur::schur_super(&lambda, &pair).scale(&coeff));
        out.add_term(lambda, coeff);
    }
    Ok(out)
}

/// Expands a homogeneous polynomial in `c[1..m]` into classical Schur
/// functions at rank `m`, via the conjugate-side determinants. Inverse of
/// evaluating an expansion in Chern classes at rank `m` with the dual
/// bundle classes set to zero.
pub fn expand_chern_polynomial(p: &Poly, m: usize) -> Result<SchurExpansion, Error> {
    if !p.vars_all(|v| v.kind == VarKind::C && v.index as usize <= m) {
        return Err(Error::WrongVariables {
            expected: format!("c[1..{m}]"),
            found: "other".to_string(),
        });
    }
    if p.homogeneous_degree().is_none() {
        return Err(Error::NonHomogeneous);
    }
    // pivot of s_lambda in the e-monomials is the conjugate partition
    eliminate(
        p,
        chern_monomial_partition,
        |mu| schur_in_chern_classes(&mu.conjugate(), m),
    )
    .map(|e| {
        let mut out = SchurExpansion::new();
        for (mu, c) in e.iter() {
            out.add_term(mu.conjugate(), c.clone());
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::schur::{schur_super, BundleSpec, VirtualPair};

    fn seg(i: u32) -> Poly {
        Poly::var(Variable::seg(i))
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn jacobi_trudi_in_seg() {
        // S_(1,2) = S1*S2 - S3
        let p = schur_in_seg(&part(&[1, 2]));
        assert_eq!(p, seg(1).mul(&seg(2)).sub(&seg(3)));
        assert_eq!(schur_in_seg(&Partition::empty()), Poly::one());
    }

    #[test]
    fn expand_examples() {
        // one-box Pieri: S1 * S1 = S2 + S11
        let e = expand_to_schur(&seg(1).mul(&seg(1)), None).unwrap();
        assert_eq!(e.coeff(&part(&[2])), Coeff::from(1));
        assert_eq!(e.coeff(&part(&[1, 1])), Coeff::from(1));
        assert_eq!(e.len(), 2);

        // s1^3 + 3 s1 s2 + 2 s3 = 6 S_3 + 5 S_12 + S_111
        let p = seg(1)
            .pow(3)
            .add(&seg(1).mul(&seg(2)).scale(&Coeff::from(3)))
            .add(&seg(3).scale(&Coeff::from(2)));
        let e = expand_to_schur(&p, None).unwrap();
        assert_eq!(e.coeff(&part(&[3])), Coeff::from(6));
        assert_eq!(e.coeff(&part(&[1, 2])), Coeff::from(5));
        assert_eq!(e.coeff(&part(&[1, 1, 1])), Coeff::from(1));
        assert_eq!(e.len(), 3);

        // zero polynomial
        let z = seg(2).sub(&seg(2));
        assert!(expand_to_schur(&z, None).unwrap().is_empty());
    }

    #[test]
    fn expand_rejects_bad_input() {
        let mixed = seg(1).add(&seg(1).mul(&seg(1)));
        assert_eq!(expand_to_schur(&mixed, None), Err(Error::NonHomogeneous));
        let wrong = Poly::var(Variable::c(1));
        assert!(matches!(
            expand_to_schur(&wrong, None),
            Err(Error::WrongVariables { .. })
        ));
    }

    #[test]
    fn multiply_examples() {
        let s2 = SchurExpansion::single(part(&[2]), Coeff::one());
        let prod = schur_multiply(&s2, &s2);
        assert_eq!(prod.coeff(&part(&[4])), Coeff::from(1));
        assert_eq!(prod.coeff(&part(&[1, 3])), Coeff::from(1));
        assert_eq!(prod.coeff(&part(&[2, 2])), Coeff::from(1));
        assert_eq!(prod.len(), 3);

        let any = SchurExpansion::single(part(&[1, 2]), Coeff::from(7));
        assert_eq!(schur_multiply(&SchurExpansion::unit(), &any), any);

        let s1 = SchurExpansion::single(part(&[1]), Coeff::one());
        let s11 = SchurExpansion::single(part(&[1, 1]), Coeff::one());
        let p = schur_multiply(&s1, &s11);
        assert_eq!(p.coeff(&part(&[1, 2])), Coeff::from(1));
        assert_eq!(p.coeff(&part(&[1, 1, 1])), Coeff::from(1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn root_expansion_examples() {
        let a1 = Poly::var(Variable::root_a(1));
        let a2 = Poly::var(Variable::root_a(2));
        // e_2 -> S_(1,1)
        let e = expand_root_polynomial(&a1.mul(&a2), 2).unwrap();
        assert_eq!(e.coeff(&part(&[1, 1])), Coeff::from(1));
        assert_eq!(e.len(), 1);
        // h_2 -> S_(2)
        let h2 = a1.mul(&a1).add(&a1.mul(&a2)).add(&a2.mul(&a2));
        let e = expand_root_polynomial(&h2, 2).unwrap();
        assert_eq!(e.coeff(&part(&[2])), Coeff::from(1));
        assert_eq!(e.len(), 1);
        // (a1+a2)^2 = S_2 + S_11
        let sq = a1.add(&a2).pow(2);
        let e = expand_root_polynomial(&sq, 2).unwrap();
        assert_eq!(e.coeff(&part(&[2])), Coeff::from(1));
        assert_eq!(e.coeff(&part(&[1, 1])), Coeff::from(1));
        // non-symmetric input
        assert!(matches!(
            expand_root_polynomial(&a1.pow(2), 2),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn chern_class_expansion_inverts_evaluation() {
        for w in 1..=5 {
            for lambda in partitions_of(w, None, None) {
                let m = w as usize;
                let img = schur_in_chern_classes(&lambda, m);
                let back = expand_chern_polynomial(&img, m).unwrap();
                assert_eq!(back, SchurExpansion::single(lambda.clone(), Coeff::one()));
            }
        }
    }

    #[test]
    fn chern_class_determinant_matches_roots() {
        // substitute c[k] = e_k(a) and compare with the root determinant
        for w in 1..=4 {
            for lambda in partitions_of(w, None, None) {
                let m = w as usize;
                let img = schur_in_chern_classes(&lambda, m);
                let mut assignment = std::collections::HashMap::new();
                let vars: Vec<Variable> = (1..=m as u32).map(Variable::root_a).collect();
                for k in 1..=m {
                    assignment.insert(Variable::c(k as u32), crate::schur::elementary(&vars, k));
                }
                let via_e = img.specialize(&assignment);
                let pair = VirtualPair::new(BundleSpec::a_roots(m), BundleSpec::empty());
                assert_eq!(via_e, schur_super(&lambda, &pair), "lambda {lambda}");
            }
        }
    }

    #[test]
    fn display_matches_grammar() {
        let mut e = SchurExpansion::new();
        e.add_term(part(&[4]), Coeff::from(24));
        e.add_term(part(&[1, 3]), Coeff::from(26));
        e.add_term(part(&[1, 1, 1, 1]), Coeff::from(1));
        assert_eq!(e.to_string(), "24*S[4] + 26*S[1,3] + S[1,1,1,1]");
        let parsed = crate::parse::parse_expr(&e.to_string())
            .unwrap()
            .as_linear_schur()
            .unwrap();
        assert_eq!(parsed, e);
    }
}
