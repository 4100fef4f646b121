//! Parser for the expression grammar shared by the CLI and corpus files.
//!
//! ```text
//! expr := term (('+'|'-') term)*
//! term := (int '*')? atom ('*' atom)* | int
//! atom := ('c'|'cp') '[' int ']' ('^' int)?
//!       | 'S' '[' int (',' int)* ']' ('^' int)?
//! ```
//!
//! Whitespace between tokens is insignificant; integers are base-10 with no
//! leading `+`. `S[...]` atoms are kept as opaque Schur atoms; `c`/`cp`
//! atoms build Chern monomials. The two families cannot be mixed in one
//! expression.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{Coeff, Monomial, Poly, Variable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `c[i]^e` or `cp[i]^e`.
    Var(Variable, u32),
    /// `S[i1,...,il]^e`, an opaque Schur-basis atom.
    Schur(Partition, u32),
}

/// A parsed expression: a sum of integer-weighted products of atoms.
#[derive(Clone, Debug, Default)]
pub struct ParsedExpr {
    pub terms: Vec<(Coeff, Vec<Atom>)>,
}

impl ParsedExpr {
    pub fn has_schur_atoms(&self) -> bool {
        self.terms
            .iter()
            .any(|(_, atoms)| atoms.iter().any(|a| matches!(a, Atom::Schur(..))))
    }

    pub fn has_chern_vars(&self) -> bool {
        self.terms
            .iter()
            .any(|(_, atoms)| atoms.iter().any(|a| matches!(a, Atom::Var(..))))
    }

    /// Interprets the expression as a polynomial in `c`/`cp` variables.
    /// With `seg_single_rows` set, one-row atoms `S[i]` are read as the
    /// Segre variables `S_i`; multi-row atoms are always rejected here.
    pub fn to_chern_polynomial(&self, seg_single_rows: bool) -> Result<Poly, Error> {
        let mut out = Poly::zero();
        for (coeff, atoms) in &self.terms {
            let mut mono = Monomial::one();
            for atom in atoms {
                match atom {
                    Atom::Var(v, e) => mono = mono.mul(&Monomial::var(*v, *e)),
                    Atom::Schur(p, e) if seg_single_rows && p.len() == 1 => {
                        mono = mono.mul(&Monomial::var(Variable::seg(p.parts()[0]), *e));
                    }
                    Atom::Schur(..) => return Err(Error::MixedBasis),
                }
            }
            out.add_term(mono, coeff.clone());
        }
        Ok(out)
    }

    /// Interprets every `S` atom as a Segre-variable polynomial via its
    /// defining determinant, producing a polynomial in the `S_i` variables.
    /// `c`/`cp` atoms are rejected.
    pub fn to_seg_polynomial(&self) -> Result<Poly, Error> {
        if self.has_chern_vars() {
            return Err(Error::MixedBasis);
        }
        let mut out = Poly::zero();
        for (coeff, atoms) in &self.terms {
            let mut factor = Poly::one();
            for atom in atoms {
                match atom {
                    Atom::Schur(p, e) => {
                        factor = factor.mul(&crate::basis::schur_in_seg(p).pow(*e));
                    }
                    Atom::Var(..) => unreachable!(),
                }
            }
            out = out.add(&factor.scale(coeff));
        }
        Ok(out)
    }

    /// Fast path for plain linear combinations of Schur atoms (no products,
    /// no powers): builds the expansion directly. Returns `None` when the
    /// expression is not linear.
    pub fn as_linear_schur(&self) -> Option<crate::basis::SchurExpansion> {
        let mut exp = crate::basis::SchurExpansion::new();
        for (coeff, atoms) in &self.terms {
            match atoms.as_slice() {
                [Atom::Schur(p, 1)] => exp.add_term(p.clone(), coeff.clone()),
                _ => return None,
            }
        }
        Some(exp)
    }
}

/// Parses the expression grammar; errors carry the byte offset.
pub fn parse_expr(text: &str) -> Result<ParsedExpr, Error> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    if expr.has_schur_atoms() && expr.has_chern_vars() {
        return Err(Error::MixedBasis);
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), Error> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{}`", b as char)))
        }
    }

    fn int(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer too large"))
    }

    fn expr(&mut self) -> Result<ParsedExpr, Error> {
        let mut out = ParsedExpr::default();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (mut coeff, atoms) = self.term()?;
            if negate {
                coeff = -coeff;
            }
            out.terms.push((coeff, atoms));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Coeff, Vec<Atom>), Error> {
        let mut coeff: Coeff = BigInt::one();
        let mut atoms = Vec::new();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                coeff = Coeff::from(self.int()?);
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    atoms.push(self.atom()?);
                } else {
                    // bare integer term
                    return Ok((coeff, atoms));
                }
            }
            Some(b'c') | Some(b'S') => atoms.push(self.atom()?),
            _ => return Err(Error::parse(self.pos, "expected term")),
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            atoms.push(self.atom()?);
        }
        Ok((coeff, atoms))
    }

    fn atom(&mut self) -> Result<Atom, Error> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'c') => {
                self.pos += 1;
                let kind = if self.bytes.get(self.pos) == Some(&b'p') {
                    self.pos += 1;
                    Variable::cp
                } else {
                    Variable::c
                };
                self.expect(b'[')?;
                let idx = self.int()?;
                if idx == 0 {
                    return Err(Error::parse(start, "variable index must be >= 1"));
                }
                self.expect(b']')?;
                let exp = self.exponent()?;
                Ok(Atom::Var(kind(idx as u32), exp))
            }
            Some(b'S') => {
                self.pos += 1;
                self.expect(b'[')?;
                let mut parts = Vec::new();
                loop {
                    let part = self.int()?;
                    if part == 0 {
                        return Err(Error::parse(start, "partition parts must be >= 1"));
                    }
                    parts.push(part as u32);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        _ => break,
                    }
                }
                self.expect(b']')?;
                if !parts.windows(2).all(|w| w[0] <= w[1]) {
                    return Err(Error::parse(start, "partition parts must be weakly increasing"));
                }
                let exp = self.exponent()?;
                Ok(Atom::Schur(Partition::new(parts), exp))
            }
            _ => Err(Error::parse(self.pos, "expected atom")),
        }
    }

    fn exponent(&mut self) -> Result<u32, Error> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            if e == 0 {
                return Err(Error::parse(self.pos, "exponent must be >= 1"));
            }
            Ok(e as u32)
        } else {
            Ok(1)
        }
    }
}
