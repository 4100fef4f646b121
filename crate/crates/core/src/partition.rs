//! Integer partitions: the index set of the Schur basis.
//!
//! Parts are stored weakly increasing, e.g. `(1,2,2,3)`. The canonical
//! printed form is exponent notation (`12^23` for `(1,2,2,3)`); the bracket
//! form `S[1,2,2,3]` is used inside expression files. Both are accepted by
//! [`Partition::parse`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::Error;

/// A partition with weakly increasing positive parts.
///
/// The empty partition is the empty list and prints as `0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parts, weakly increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts, weakly decreasing.
    pub fn decreasing(&self) -> Vec<u32> {
        let mut d = self.parts.clone();
        d.reverse();
        d
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The weight `|I|`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, 0 for the empty partition.
    pub fn max_part(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// The dual (conjugate) partition: transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.max_part() as usize;
        let mut cols = Vec::with_capacity(width);
        for c in 1..=width as u32 {
            let count = self.parts.iter().filter(|&&p| p >= c).count() as u32;
            if count > 0 {
                cols.push(count);
            }
        }
        // columns of an increasing diagram come out decreasing
        cols.reverse();
        Partition { parts: cols }
    }

    /// True iff the diagram fits the `(m,n)` fat hook, i.e. at most `n`
    /// columns survive past the first `m` rows. This is the nonvanishing
    /// condition for the Schur function of a virtual bundle of ranks `(m,n)`.
    pub fn fits_hook(&self, m: usize, n: usize) -> bool {
        let dec = self.decreasing();
        dec.get(m).map_or(true, |&p| p as usize <= n)
    }

    /// Parses either exponent notation (`12^23`, `1^52`, `4`, `0` for the
    /// empty partition) or bracket notation (`S[1,2,2,3]`).
    ///
    /// Exponent groups are single digits, optionally with a single-digit
    /// multiplicity after `^`, juxtaposed as in the corpus labels; parts or
    /// multiplicities above 9 need the bracket form.
    pub fn parse(text: &str) -> Result<Partition, Error> {
        let t = text.trim();
        if t == "0" {
            return Ok(Partition::empty());
        }
        if t.starts_with('S') || t.starts_with('[') {
            return Self::parse_bracket(t);
        }
        Self::parse_exponent(t)
    }

    fn parse_bracket(t: &str) -> Result<Partition, Error> {
        let inner = t
            .strip_prefix('S')
            .unwrap_or(t)
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected S[..] partition literal"))?;
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(0, format!("bad partition part `{}`", piece.trim())))?;
            if p == 0 {
                return Err(Error::parse(0, "partition parts must be >= 1"));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::parse(0, "bracket partition parts must be weakly increasing"));
        }
        Ok(Partition { parts })
    }

    fn parse_exponent(t: &str) -> Result<Partition, Error> {
        let bytes = t.as_bytes();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            if b.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            if !b.is_ascii_digit() || b == b'0' {
                return Err(Error::parse(i, format!("unexpected `{}` in exponent notation", b as char)));
            }
            let part = (b - b'0') as u32;
            i += 1;
            let mut mult = 1u32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                if i >= bytes.len() || !bytes[i].is_ascii_digit() || bytes[i] == b'0' {
                    return Err(Error::parse(i, "expected nonzero digit after `^`"));
                }
                mult = (bytes[i] - b'0') as u32;
                i += 1;
            }
            for _ in 0..mult {
                parts.push(part);
            }
        }
        if parts.is_empty() {
            return Err(Error::parse(0, "empty partition literal"));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// Bracket form, `S[1,2,2,3]`; the empty partition prints as `S[]`-less `0`.
    pub fn bracket(&self) -> String {
        if self.parts.is_empty() {
            return "0".to_string();
        }
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("S[{}]", body.join(","))
    }
}

/// Enumerates all partitions of `n`, optionally bounded in largest part and
/// length, grouped dominance-descending (lexicographic on decreasing forms).
pub fn partitions_of(n: u32, max_part: Option<u32>, max_len: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let cap = max_part.unwrap_or(n).min(n);
    let len_cap = max_len.unwrap_or(n as usize);
    let mut stack = Vec::new();
    // decreasing forms in descending lex order
    fn rec(remaining: u32, cap: u32, len_left: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = stack.clone();
            parts.reverse();
            out.push(Partition { parts });
            return;
        }
        if len_left == 0 {
            return;
        }
        let hi = cap.min(remaining);
        for next in (1..=hi).rev() {
            stack.push(next);
            rec(remaining - next, next, len_left - 1, stack, out);
            stack.pop();
        }
    }
    if n == 0 {
        return vec![Partition::empty()];
    }
    rec(n, cap, len_cap, &mut stack, &mut out);
    out
}

/// Dominance order on partitions of equal weight: `I <= J` iff every partial
/// sum of the decreasing form of `I` is at most the corresponding one of `J`.
pub fn dominance_leq(i: &Partition, j: &Partition) -> Result<bool, Error> {
    if i.weight() != j.weight() {
        return Err(Error::WeightMismatch {
            left: i.to_string(),
            right: j.to_string(),
        });
    }
    let a = i.decreasing();
    let b = j.decreasing();
    let len = a.len().max(b.len());
    let mut sa = 0u64;
    let mut sb = 0u64;
    for k in 0..len {
        sa += a.get(k).copied().unwrap_or(0) as u64;
        sb += b.get(k).copied().unwrap_or(0) as u64;
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order: lexicographic on decreasing forms (zero-padded). Within a
/// weight class this linearly extends dominance, so iterating a map of
/// partitions in reverse yields the dominance-descending print order.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.len().max(other.len());
        for k in 0..len {
            let a = if k < self.len() { self.parts[self.len() - 1 - k] } else { 0 };
            let b = if k < other.len() { other.parts[other.len() - 1 - k] } else { 0 };
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Partition {
    /// Exponent notation: `(1,1,2)` prints as `1^22`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut mult = 1;
            while i + mult < self.parts.len() && self.parts[i + mult] == p {
                mult += 1;
            }
            if mult == 1 {
                write!(f, "{}", p)?;
            } else {
                write!(f, "{}^{}", p, mult)?;
            }
            i += mult;
        }
        Ok(())
    }
}
