//! Sweeps that run the oracles against the closed-form implementation and tally the results.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::enumerate::partitions_unguarded;
use crate::combinatorics::{BasisKey, Composition, Modulus, Partition};
use crate::error::{GammaError, Result};
use crate::guard::Guard;
use crate::oracles::{
    check_classical_limit, check_count_identity, check_p_intersection, check_relation, d_via_w,
    expand_e_determinant, expand_e_recursive, expand_e_recursive_table, random_case,
};
use crate::ring::{
    basis_monomial, d_coefficient, expand_e, straighten_direct, straighten_product, RingElement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Oracle {
    Recursive,
    Determinant,
    Numeric,
    Identities,
    All,
}

impl Oracle {
    pub const SUITES: [Oracle; 4] = [
        Oracle::Recursive,
        Oracle::Determinant,
        Oracle::Numeric,
        Oracle::Identities,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Oracle::Recursive => "recursive",
            Oracle::Determinant => "determinant",
            Oracle::Numeric => "numeric",
            Oracle::Identities => "identities",
            Oracle::All => "all",
        }
    }
}

impl fmt::Display for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Oracle {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self> {
        [Oracle::All]
            .into_iter()
            .chain(Oracle::SUITES)
            .find(|o| o.as_str() == s)
            .ok_or_else(|| GammaError::Parse {
                what: "oracle",
                input: s.to_string(),
                reason: "expected recursive, determinant, numeric, identities or all".into(),
            })
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub modulus: Modulus,
    pub max_degree: u32,
    pub seed: u64,
    /// Number of random points drawn by the numeric suite.
    pub samples: usize,
    pub guard: Guard,
}

impl VerifyConfig {
    pub fn new(modulus: Modulus, max_degree: u32) -> Self {
        VerifyConfig {
            modulus,
            max_degree,
            seed: 0,
            samples: 200,
            guard: Guard::default(),
        }
    }
}

/// Outcome of one suite. `failures` names each failing case, in a deterministic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub oracle: Oracle,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks - self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every pair `(λ, μ)` of partitions with `|λ| + |μ| ≤ max_total`.
pub fn partition_pairs(max_total: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for n in 0..=max_total {
        for a in 0..=n {
            for lambda in partitions_unguarded(a) {
                for mu in partitions_unguarded(n - a) {
                    out.push((lambda.clone(), mu));
                }
            }
        }
    }
    out
}

/// Partitions of every size up to `max`.
pub fn partitions_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(partitions_unguarded).collect()
}

/// Runs the requested suites; `Oracle::All` expands to each of them in turn.
pub fn run(config: &VerifyConfig, oracle: Oracle) -> Result<Vec<SuiteReport>> {
    config.guard.check_sweep(config.max_degree)?;
    let suites: Vec<Oracle> = match oracle {
        Oracle::All => Oracle::SUITES.to_vec(),
        single => vec![single],
    };
    suites.into_iter().map(|o| run_suite(config, o)).collect()
}

fn run_suite(config: &VerifyConfig, oracle: Oracle) -> Result<SuiteReport> {
    let m = config.modulus;
    let d = config.max_degree;
    let failures: Vec<Option<String>> = match oracle {
        Oracle::Recursive => {
            let mut out: Vec<Option<String>> = (0..=d)
                .into_par_iter()
                .map(|n| {
                    (expand_e(n, m) != expand_e_recursive(n, m))
                        .then(|| format!("e_{n}: closed form vs recursion"))
                })
                .collect();
            out.extend(straightening_sweep(d, m));
            out
        }
        Oracle::Determinant => {
            config.guard.check_determinant(d)?;
            (1..=d)
                .into_par_iter()
                .map(|n| {
                    let det = expand_e_determinant(n, m, &config.guard)?;
                    Ok((expand_e(n, m) != det)
                        .then(|| format!("e_{n}: closed form vs determinant")))
                })
                .collect::<Result<_>>()?
        }
        Oracle::Numeric => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let cases: Vec<_> = (0..config.samples)
                .map(|_| random_case(&mut rng, d, &[m]))
                .collect();
            cases
                .par_iter()
                .enumerate()
                .map(|(i, c)| {
                    (!c.check()).then(|| {
                        format!(
                            "sample {i}: h[{}] e[{}] at {:?}",
                            c.alpha,
                            c.beta,
                            c.point.values()
                        )
                    })
                })
                .collect()
        }
        Oracle::Identities => identity_sweep(d, m, &config.guard)?,
        Oracle::All => unreachable!("`run` expands All into the individual suites"),
    };
    let checks = failures.len();
    Ok(SuiteReport {
        oracle,
        checks,
        failures: failures.into_iter().flatten().collect(),
    })
}

/// Direct straightening against the product route, plus the basis fixpoint, over all partition pairs.
fn straightening_sweep(max_total: u32, m: Modulus) -> Vec<Option<String>> {
    partition_pairs(max_total)
        .into_par_iter()
        .map(|(alpha, beta)| {
            let (a, b) = (
                Composition::from(alpha.clone()),
                Composition::from(beta.clone()),
            );
            let direct = straighten_direct(&a, &b, m);
            if direct != straighten_product(&a, &b, m) {
                return Some(format!("h[{alpha}] e[{beta}]: direct vs product"));
            }
            if beta.all_divisible_by(m)
                && direct != basis_monomial(&alpha, &beta, m).expect("parts divisible")
            {
                return Some(format!("h[{alpha}] e[{beta}]: basis element not fixed"));
            }
            None
        })
        .collect()
}

fn identity_sweep(d: u32, m: Modulus, guard: &Guard) -> Result<Vec<Option<String>>> {
    let table = expand_e_recursive_table(d, m);
    let lambdas = partitions_up_to(d);
    let mut out: Vec<Option<String>> = lambdas
        .par_iter()
        .map(|lambda| -> Result<Vec<Option<String>>> {
            let want = d_coefficient(lambda, m);
            let mut fails = vec![
                (d_via_w(lambda, m, guard)? != want).then(|| format!("d[{lambda}]: W(λ) sum"))
            ];
            fails.push(
                (!check_count_identity(lambda, m, guard)?)
                    .then(|| format!("count identity at [{lambda}]")),
            );
            fails.push(
                (!check_p_intersection(lambda, m, guard)?)
                    .then(|| format!("P-intersection at [{lambda}]")),
            );
            fails.extend(stability_failures(lambda, m, &table, &want));
            Ok(fails)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    for n in 1..=d {
        if !m.divides(n) {
            out.push((!check_relation(n, m)).then(|| format!("relation in degree {n}")));
        }
        out.push((!check_classical_limit(n, guard)?).then(|| format!("classical limit n={n}")));
    }
    Ok(out)
}

/// `d_μ` must reappear as the coefficient of `h_μ e_{(rm)}` in `e_{|μ|+rm}` for every `r ≥ 0`
/// the recursion table reaches, both in the recursion and in the closed form.
fn stability_failures(
    mu: &Partition,
    m: Modulus,
    table: &[RingElement],
    want: &BigInt,
) -> Vec<Option<String>> {
    (0..)
        .map(|r| r * m.get())
        .take_while(|rm| ((mu.size() + rm) as usize) < table.len())
        .map(|rm| {
            let n = mu.size() + rm;
            let key = BasisKey::new_unchecked(mu.clone(), Partition::row(rm), m);
            let recursive = table[n as usize].coefficient(&key).expect("same modulus");
            let closed = expand_e(n, m).coefficient(&key).expect("same modulus");
            (recursive != *want || closed != *want).then(|| format!("d[{mu}] in e_{n}"))
        })
        .collect()
}
