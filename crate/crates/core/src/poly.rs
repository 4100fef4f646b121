//! Exact sparse graded polynomials over arbitrary-precision integers.
//!
//! Variables are Chern classes `c[i]`, dual Chern classes `cp[j]`, Segre
//! atoms `S[i]` of a virtual bundle, and the formal Chern roots `a_i`, `b_j`
//! used by the evaluation oracle. `c[i]`, `cp[i]` and `S[i]` carry degree
//! `i`; roots carry degree 1.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Coeff = BigInt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum VarKind {
    C,
    Cp,
    Seg,
    RootA,
    RootB,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Variable {
    pub kind: VarKind,
    pub index: u32,
}

impl Variable {
    pub fn c(i: u32) -> Self {
        Variable { kind: VarKind::C, index: i }
    }
    pub fn cp(i: u32) -> Self {
        Variable { kind: VarKind::Cp, index: i }
    }
    pub fn seg(i: u32) -> Self {
        Variable { kind: VarKind::Seg, index: i }
    }
    pub fn root_a(i: u32) -> Self {
        Variable { kind: VarKind::RootA, index: i }
    }
    pub fn root_b(i: u32) -> Self {
        Variable { kind: VarKind::RootB, index: i }
    }

    pub fn degree(&self) -> u32 {
        match self.kind {
            VarKind::C | VarKind::Cp | VarKind::Seg => self.index,
            VarKind::RootA | VarKind::RootB => 1,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::C => write!(f, "c[{}]", self.index),
            VarKind::Cp => write!(f, "cp[{}]", self.index),
            VarKind::Seg => write!(f, "S[{}]", self.index),
            VarKind::RootA => write!(f, "a{}", self.index),
            VarKind::RootB => write!(f, "b{}", self.index),
        }
    }
}

/// A monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exp)])
        }
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(v, e)| v.degree() * e).sum()
    }

    pub fn exponent_of(&self, v: Variable) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn contains(&self, v: Variable) -> bool {
        self.exponent_of(v) > 0
    }

    /// Merge-multiplies two sorted factor lists.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total degree first, then lexicographic on the factor list; this is the
/// deterministic printing order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact integer coefficients; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Variable) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v, 1), Coeff::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Coeff) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, None)
    }

    /// Product, discarding monomials of degree above `max_degree`. Used by
    /// determinant expansion where completions past the target degree are
    /// known to vanish.
    pub fn mul_truncated(&self, other: &Poly, max_degree: Option<u32>) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in self.terms() {
            let da = ma.degree();
            for (mb, cb) in other.terms() {
                if let Some(cap) = max_degree {
                    if da + mb.degree() > cap {
                        continue;
                    }
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn specialize(&self, assignments: &HashMap<Variable, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            let mut rest = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for (v, e) in m.factors() {
                match assignments.get(v) {
                    Some(sub) => factor = factor.mul(&sub.pow(*e)),
                    None => rest.push((*v, *e)),
                }
            }
            for (m2, c2) in factor.terms() {
                out.add_term(m2.mul(&Monomial(rest.clone())), c2.clone());
            }
        }
        out
    }

    /// Drops every term containing `v` (substitutes `v = 0`).
    pub fn kill_var(&self, v: Variable) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms() {
            if !m.contains(v) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Degree if homogeneous (zero polynomial reports `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (m, _) in self.terms() {
            let d = m.degree();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn max_degree(&self) -> u32 {
        self.terms().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// True iff every variable in the polynomial satisfies `pred`.
    pub fn vars_all(&self, pred: impl Fn(Variable) -> bool) -> bool {
        self.terms()
            .all(|(m, _)| m.factors().iter().all(|(v, _)| pred(*v)))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
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
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
