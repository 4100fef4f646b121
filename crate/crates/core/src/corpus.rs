//! The embedded Thom-polynomial corpus and its verification harness.
//!
//! Corpus files are line-oriented:
//!
//! ```text
//! record A2[0]
//! display A_2[0]
//! kappa 0
//! codim 2
//! poly 2*S[2] + S[1,1]
//! end
//! ```
//!
//! `#` starts a comment. `family functions` marks the function-singularity
//! table, which carries no meaningful kappa (stored as -1).

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::basis::{expand_chern_polynomial, SchurExpansion};
use crate::error::Error;
use crate::parse::parse_expr;
use crate::poly::{Poly, Variable};
use crate::positivity::certify_expansion;
use crate::schur;

/// The corpus shipped with the crate.
pub const EMBEDDED_CORPUS: &str = include_str!("../../../corpus/paper.thom");

/// A named singularity class with its Schur expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThomRecord {
    /// Shell-safe identifier, e.g. `A4[0]`, `I22[1]`, `D6`.
    pub name: String,
    /// Typographic name, e.g. `I_{2,2}[1]`.
    pub display: String,
    /// `n - m`; `-1` for the function-singularity family.
    pub kappa: i32,
    /// Common weight of the expansion's partitions.
    pub codim: u32,
    /// Set for the function-singularity table.
    pub family: Option<String>,
    pub expansion: SchurExpansion,
}

/// Parses a corpus file. Duplicate names with identical expansions collapse
/// into one record (the collapse is recorded in `notes`); duplicates that
/// disagree are an error.
pub fn load_corpus(text: &str) -> Result<(Vec<ThomRecord>, Vec<String>), Error> {
    let mut records: Vec<ThomRecord> = Vec::new();
    let mut notes = Vec::new();
    let mut current: Option<(usize, ThomRecord)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match keyword {
            "record" => {
                if current.is_some() {
                    return Err(Error::corpus(lineno, "nested record"));
                }
                if rest.is_empty() {
                    return Err(Error::corpus(lineno, "record needs a name"));
                }
                current = Some((
                    lineno,
                    ThomRecord {
                        name: rest.to_string(),
                        display: rest.to_string(),
                        kappa: 0,
                        codim: 0,
                        family: None,
                        expansion: SchurExpansion::new(),
                    },
                ));
            }
            "display" => {
                let (_, rec) = current
                    .as_mut()
                    .ok_or_else(|| Error::corpus(lineno, "display outside record"))?;
                rec.display = rest.to_string();
            }
            "family" => {
                let (_, rec) = current
                    .as_mut()
                    .ok_or_else(|| Error::corpus(lineno, "family outside record"))?;
                rec.family = Some(rest.to_string());
            }
            "kappa" => {
                let (_, rec) = current
                    .as_mut()
                    .ok_or_else(|| Error::corpus(lineno, "kappa outside record"))?;
                rec.kappa = rest
                    .parse()
                    .map_err(|_| Error::corpus(lineno, format!("bad kappa `{rest}`")))?;
            }
            "codim" => {
                let (_, rec) = current
                    .as_mut()
                    .ok_or_else(|| Error::corpus(lineno, "codim outside record"))?;
                rec.codim = rest
                    .parse()
                    .map_err(|_| Error::corpus(lineno, format!("bad codim `{rest}`")))?;
                if rec.codim == 0 {
                    return Err(Error::corpus(lineno, "codim must be positive"));
                }
            }
            "poly" => {
                let (_, rec) = current
                    .as_mut()
                    .ok_or_else(|| Error::corpus(lineno, "poly outside record"))?;
                let parsed = parse_expr(rest)
                    .map_err(|e| Error::corpus(lineno, format!("in poly: {e}")))?;
                rec.expansion = parsed
                    .as_linear_schur()
                    .ok_or_else(|| Error::corpus(lineno, "poly must be a linear combination of S atoms"))?;
            }
            "end" => {
                let (start, rec) = current
                    .take()
                    .ok_or_else(|| Error::corpus(lineno, "end outside record"))?;
                if rec.expansion.is_empty() {
                    return Err(Error::corpus(start, format!("record {} has no poly", rec.name)));
                }
                for (part, _) in rec.expansion.iter() {
                    if part.weight() != rec.codim {
                        return Err(Error::Record {
                            name: rec.name.clone(),
                            message: format!(
                                "partition {} has weight {}, codim is {}",
                                part,
                                part.weight(),
                                rec.codim
                            ),
                        });
                    }
                }
                match records.iter().find(|r| r.name == rec.name) {
                    Some(prev) => {
                        if prev.expansion == rec.expansion && prev.codim == rec.codim {
                            notes.push(format!(
                                "record {} listed more than once with identical expansion; collapsed",
                                rec.name
                            ));
                        } else {
                            return Err(Error::Record {
                                name: rec.name,
                                message: "duplicate record with differing expansion".to_string(),
                            });
                        }
                    }
                    None => records.push(rec),
                }
            }
            other => {
                return Err(Error::corpus(lineno, format!("unknown keyword `{other}`")));
            }
        }
    }
    if let Some((start, rec)) = current {
        return Err(Error::corpus(start, format!("record {} not closed", rec.name)));
    }
    Ok((records, notes))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub record: String,
    pub check: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
    pub records: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    /// 0 iff every check passed.
    pub fn exit_status(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    /// One line per check, tab-separated: `record  check  PASS|FAIL  detail`.
    pub fn machine_format(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{}\t{}\t{}\t{}", c.record, c.check, status, c.detail).unwrap();
        }
        writeln!(
            out,
            "summary\ttotal\t{}\t{} records, {} checks, {} failed",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.records,
            self.checks.len(),
            self.failed()
        )
        .unwrap();
        out
    }
}

/// Runs the per-record checks: positivity, homogeneity against the stated
/// codim, and exact round-trip through evaluation at ranks
/// `(codim, codim)`. Records are verified independently (in parallel when
/// `jobs != Some(1)`), and the report order always follows the input.
pub fn verify_corpus(records: &[ThomRecord], jobs: Option<usize>) -> VerificationReport {
    let run = |rec: &ThomRecord| verify_record(rec);
    let per_record: Vec<Vec<CheckResult>> = match jobs {
        Some(1) => records.iter().map(run).collect(),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .expect("thread pool");
            pool.install(|| records.par_iter().map(run).collect())
        }
        None => records.par_iter().map(run).collect(),
    };
    VerificationReport {
        checks: per_record.into_iter().flatten().collect(),
        records: records.len(),
    }
}

fn verify_record(rec: &ThomRecord) -> Vec<CheckResult> {
    let mut out = Vec::new();

    let verdict = verify_thom_positivity(rec);
    out.push(CheckResult {
        record: rec.name.clone(),
        check: "positivity",
        pass: verdict.is_positive(),
        detail: verdict.to_string(),
    });

    let bad_weight = rec
        .expansion
        .iter()
        .find(|(p, _)| p.weight() != rec.codim);
    out.push(CheckResult {
        record: rec.name.clone(),
        check: "homogeneity",
        pass: bad_weight.is_none(),
        detail: match bad_weight {
            None => format!("all weights = {}", rec.codim),
            Some((p, _)) => format!("partition {} breaks codim {}", p, rec.codim),
        },
    });

    let (pass, detail) = match round_trip(&rec.expansion, rec.codim as usize) {
        Ok(back) if back == rec.expansion => (true, "exact".to_string()),
        Ok(back) => (false, format!("re-expansion differs: {back}")),
        Err(e) => (false, format!("re-expansion failed: {e}")),
    };
    out.push(CheckResult {
        record: rec.name.clone(),
        check: "round-trip",
        pass,
        detail,
    });

    out
}

/// Positivity of a corpus record (the corpus-level restatement of the
/// nonnegativity theorem).
pub fn verify_thom_positivity(rec: &ThomRecord) -> crate::positivity::PositivityVerdict {
    certify_expansion(&rec.expansion, None)
}

/// Evaluates the expansion at ranks `(d, d)` in Chern-class variables and
/// expands it back. The dual-bundle classes are then specialized away,
/// which leaves the classical rank-`d` evaluation; at rank `d` no degree-`d`
/// information is lost.
fn round_trip(expansion: &SchurExpansion, d: usize) -> Result<SchurExpansion, Error> {
    let mut evaluated = Poly::zero();
    for (part, coeff) in expansion.iter() {
        let image = schur::schur_super_chern(part, d, d);
        evaluated = evaluated.add(&image.scale(coeff));
    }
    let mut classical = evaluated;
    for j in 1..=d {
        classical = classical.kill_var(Variable::cp(j as u32));
    }
    expand_chern_polynomial(&classical, d)
}

/// Convenience: load and verify the embedded corpus.
pub fn verify_embedded(jobs: Option<usize>) -> Result<VerificationReport, Error> {
    let (records, _) = load_corpus(EMBEDDED_CORPUS)?;
    Ok(verify_corpus(&records, jobs))
}
