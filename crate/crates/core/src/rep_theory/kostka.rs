//! User-supplied signed p-Kostka numbers and the multiplicity transfer through an expansion.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{strictly_dominates, Composition, PairPartition};
use crate::error::{GammaError, Result};
use crate::rep_theory::expansion::{expand_module, odd_prime, Flavor};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    p: u32,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    base: String,
    summand: String,
    mult: u64,
}

/// Multiplicities `(M(base) : Y(summand))` for pairs in `𝒫²_p`.
///
/// A base that appears in at least one entry has a *known row*: unlisted summands in that row
/// are zero and its diagonal entry is 1. For other bases only the entries forced by
/// unitriangularity are known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KostkaTable {
    p: u32,
    entries: BTreeMap<(PairPartition, PairPartition), u64>,
    rows: BTreeSet<PairPartition>,
}

impl KostkaTable {
    pub fn new(p: u32) -> Result<Self> {
        odd_prime(p)?;
        Ok(KostkaTable {
            p,
            ..Default::default()
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds an entry, enforcing equal sizes, diagonal value 1 and unitriangularity.
    pub fn insert(&mut self, base: PairPartition, summand: PairPartition, mult: u64) -> Result<()> {
        let described = format!("({base}, {summand}, {mult})");
        for pair in [&base, &summand] {
            if pair.modulus().get() != self.p {
                return Err(GammaError::InvalidTable(format!(
                    "entry {} uses modulus {} but the table has p = {}",
                    described,
                    pair.modulus(),
                    self.p
                )));
            }
        }
        if base.size() != summand.size() {
            return Err(GammaError::InvalidTable(format!(
                "entry {} mixes sizes",
                described
            )));
        }
        if base == summand && mult != 1 {
            return Err(GammaError::InvalidTable(format!(
                "diagonal entry {} must be 1",
                described
            )));
        }
        if base != summand && mult > 0 && !strictly_dominates(&summand, &base) {
            return Err(GammaError::InvalidTable(format!(
                "entry {}: summand does not strictly dominate base",
                described
            )));
        }
        let key = (base.clone(), summand);
        if self.entries.contains_key(&key) {
            return Err(GammaError::InvalidTable(format!(
                "duplicate entry {}",
                described
            )));
        }
        self.entries.insert(key, mult);
        self.rows.insert(base);
        Ok(())
    }

    /// The multiplicity if the table determines it.
    pub fn get(&self, base: &PairPartition, summand: &PairPartition) -> Option<u64> {
        if let Some(&v) = self.entries.get(&(base.clone(), summand.clone())) {
            return Some(v);
        }
        if self.rows.contains(base) {
            return Some(u64::from(base == summand));
        }
        if base != summand && !strictly_dominates(summand, base) {
            return Some(0);
        }
        None
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: TableDoc = serde_json::from_str(s)?;
        let mut table = KostkaTable::new(doc.p)?;
        let p = odd_prime(doc.p)?;
        for entry in doc.entries {
            let base = PairPartition::parse(&entry.base, p)?;
            let summand = PairPartition::parse(&entry.summand, p)?;
            table.insert(base, summand, entry.mult)?;
        }
        Ok(table)
    }

    pub fn to_json(&self) -> String {
        let doc = TableDoc {
            p: self.p,
            entries: self
                .entries
                .iter()
                .map(|((b, s), &mult)| EntryDoc {
                    base: b.to_string(),
                    summand: s.to_string(),
                    mult,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("table serialization cannot fail")
    }
}

/// `(M(α|β) : Y(target)) = Σ c^(p)_{β;(ξ,pμ)} (M(λ|pμ) : Y(target))` over the expansion terms.
pub fn transfer_multiplicity(
    alpha: &Composition,
    beta: &Composition,
    target: &PairPartition,
    table: &KostkaTable,
    p: u32,
) -> Result<BigInt> {
    let prime = odd_prime(p)?;
    if table.prime() != p || target.modulus() != prime {
        return Err(GammaError::ModulusMismatch {
            left: p,
            right: if table.prime() != p {
                table.prime()
            } else {
                target.modulus().get()
            },
        });
    }
    let n = alpha.size() + beta.size();
    if target.size() != n {
        return Err(GammaError::SizeMismatch {
            left: n,
            right: target.size(),
        });
    }
    let expansion = expand_module(alpha, beta, p, Flavor::SignedYoung)?;
    let mut total = BigInt::default();
    let mut missing = Vec::new();
    for (base, coeff) in expansion.terms() {
        match table.get(base, target) {
            Some(mult) => total += coeff * BigInt::from(mult),
            None => missing.push(format!("{base} -> {target}")),
        }
    }
    if !missing.is_empty() {
        return Err(GammaError::IncompleteTable { missing });
    }
    if total.is_negative() {
        return Err(GammaError::NegativeMultiplicity(total));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Modulus;
    use crate::rep_theory::expansion::canonical_summand;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> PairPartition {
        PairPartition::parse(s, Modulus::new(3).unwrap()).unwrap()
    }

    #[test]
    fn diagonal_is_one() {
        let mut t = KostkaTable::new(3).unwrap();
        t.insert(pair("2,1|3"), pair("2,1|3"), 1).unwrap();
        let got = transfer_multiplicity(&comp("2,1"), &comp("3"), &pair("2,1|3"), &t, 3).unwrap();
        assert_eq!(got, 1.into());
    }

    #[test]
    fn canonical_target_with_toy_table() {
        let target = canonical_summand(&comp("5"), &comp("4,3,2"), 3).unwrap();
        let mut t = KostkaTable::new(3).unwrap();
        t.insert(pair("5,2,1|3,3"), pair("5,2,1|3,3"), 1).unwrap();
        t.insert(pair("5,1,1,1|3,3"), pair("5,1,1,1|3,3"), 1)
            .unwrap();
        let got = transfer_multiplicity(&comp("5"), &comp("4,3,2"), &target, &t, 3).unwrap();
        assert_eq!(got, 1.into());
    }

    #[test]
    fn empty_table_is_incomplete() {
        let t = KostkaTable::new(3).unwrap();
        let target = canonical_summand(&comp("5"), &comp("4,3,2"), 3).unwrap();
        let err = transfer_multiplicity(&comp("5"), &comp("4,3,2"), &target, &t, 3).unwrap_err();
        match err {
            GammaError::IncompleteTable { missing } => {
                assert_eq!(missing, ["5,1,1,1|3,3 -> 5,1,1,1|3,3"])
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_results_are_reported() {
        // -[M((2)|∅)] + [M((1,1)|∅)]; claim Y((2)|∅) sits in M((1,1)|∅) zero times
        let mut t = KostkaTable::new(3).unwrap();
        t.insert(pair("1,1|"), pair("2|"), 0).unwrap();
        t.insert(pair("2|"), pair("2|"), 1).unwrap();
        let err = transfer_multiplicity(&comp(""), &comp("2"), &pair("2|"), &t, 3).unwrap_err();
        assert_eq!(err, GammaError::NegativeMultiplicity((-1).into()));
    }

    #[test]
    fn loader_enforces_invariants() {
        let ok = r#"{"p": 3, "entries": [{"base": "1,1|", "summand": "2|", "mult": 1},
                                           {"base": "1,1|", "summand": "1,1|", "mult": 1}]}"#;
        let t = KostkaTable::from_json(ok).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(KostkaTable::from_json(&t.to_json()).unwrap(), t);
        for (doc, needle) in [
            (
                r#"{"p": 3, "entries": [{"base": "2|", "summand": "2|", "mult": 2}]}"#,
                "diagonal",
            ),
            (
                r#"{"p": 3, "entries": [{"base": "2|", "summand": "1,1|", "mult": 1}]}"#,
                "dominate",
            ),
            (
                r#"{"p": 3, "entries": [{"base": "2|", "summand": "1|", "mult": 1}]}"#,
                "sizes",
            ),
            (
                r#"{"p": 3, "entries": [{"base": "2|", "summand": "2|", "mult": 1},
                                      {"base": "2|", "summand": "2|", "mult": 1}]}"#,
                "duplicate",
            ),
        ] {
            let err = KostkaTable::from_json(doc).unwrap_err().to_string();
            assert!(err.contains(needle), "{err}");
        }
        assert_eq!(
            KostkaTable::from_json(r#"{"p": 4, "entries": []}"#),
            Err(GammaError::NotOddPrime(4))
        );
    }
}
