//! witness → `Γ` → Hamiltonian cycle of `Γ` → Berge-cycle.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::gamma::{build_gamma_case1, build_gamma_case2, GammaBundle};
use super::witness::{for_each_witness, Witness};
use crate::colors::Color;
use crate::error::{Error, Result};
use crate::extend::{build_candidates, extend_greedy_ordered, extend_matching};
use crate::hamilton::{chvatal_check, find_hamiltonian_cycle, HamiltonOutcome};
use crate::hypercore::{verify_berge_cycle, BergeCycle, Coloring, Verdict};
use crate::shadow::{default_degree_bound, ColorProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stage {
    Witness,
    Gamma,
    Hamiltonian,
    Extension,
}

/// One witness carried through the pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub witness: Witness,
    /// The last stage entered; on success this is `Extension`.
    pub stage: Stage,
    pub succeeded: bool,
    pub detail: String,
    pub chvatal: Option<bool>,
    /// Whether the ordered greedy extension succeeded (before any fallback).
    pub greedy: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructOptions {
    pub d_bound: u64,
    /// Overrides the `r - 1` good-color threshold.
    pub good_threshold: Option<u64>,
    /// Node budget per Hamiltonicity search.
    pub hamilton_budget: u64,
    /// Witnesses tried before giving up.
    pub max_attempts: usize,
}

impl ConstructOptions {
    pub fn new(d_bound: u64) -> Self {
        Self { d_bound, good_threshold: None, hamilton_budget: 1_000_000, max_attempts: 32 }
    }

    pub fn for_uniformity(r: usize) -> Self {
        Self::new(default_degree_bound(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructOutcome {
    pub found: Option<(Color, BergeCycle)>,
    /// Furthest stage any attempt reached, when nothing was found.
    pub failed_stage: Option<Stage>,
    pub attempts: Vec<Attempt>,
    /// Bundle of the successful attempt, else of the last one built.
    pub bundle: Option<GammaBundle>,
    /// Hamiltonicity nodes spent.
    pub work: u64,
}

pub fn constructive_find(coloring: &Coloring, d_bound: u64) -> Result<ConstructOutcome> {
    constructive_find_with(coloring, &ConstructOptions::new(d_bound))
}

/// Witnesses are tried in search order; the first that survives every stage
/// wins.
pub fn constructive_find_with(coloring: &Coloring, opts: &ConstructOptions) -> Result<ConstructOutcome> {
    let p = *coloring.params();
    let r = p.r();
    if p.k() as usize != r - 1 {
        return Err(Error::Precondition(format!("constructive search needs k = r - 1, got k = {}, r = {r}", p.k())));
    }
    let profile = match opts.good_threshold {
        Some(t) => ColorProfile::with_threshold(coloring, t),
        None => ColorProfile::new(coloring),
    };
    let class_sizes = coloring.class_sizes();
    let mut out = ConstructOutcome { found: None, failed_stage: None, attempts: Vec::new(), bundle: None, work: 0 };
    let mut failure: Option<Error> = None;

    for_each_witness(&profile, opts.d_bound, |w| {
        let target = w.target_color();
        let mut attempt =
            Attempt { witness: w.clone(), stage: Stage::Gamma, succeeded: false, detail: String::new(), chvatal: None, greedy: None };
        match run_attempt(coloring, &profile, &w, class_sizes[target as usize - 1], opts, &mut attempt, &mut out) {
            Ok(Some(cycle)) => {
                attempt.succeeded = true;
                out.found = Some((target, cycle));
            }
            Ok(None) => {}
            Err(e) => failure = Some(e),
        }
        out.attempts.push(attempt);
        out.found.is_none() && failure.is_none() && out.attempts.len() < opts.max_attempts
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    if out.found.is_none() {
        out.failed_stage = Some(out.attempts.iter().map(|a| a.stage).max().unwrap_or(Stage::Witness));
    }
    Ok(out)
}

fn run_attempt(
    coloring: &Coloring,
    profile: &ColorProfile<'_>,
    w: &Witness,
    class_size: u64,
    opts: &ConstructOptions,
    attempt: &mut Attempt,
    out: &mut ConstructOutcome,
) -> Result<Option<BergeCycle>> {
    let (n, r) = (profile.n(), profile.params().r());
    let target = w.target_color();
    if class_size < n as u64 {
        attempt.detail = format!("color {target} has {class_size} < n edges");
        return Ok(None);
    }
    let built = if w.f + 2 == r { build_gamma_case1(w, profile) } else { build_gamma_case2(w, profile) };
    let bundle = match built {
        Ok(b) => b,
        Err(e) => {
            attempt.detail = format!("{e}");
            return Ok(None);
        }
    };
    attempt.chvatal = Some(chvatal_check(&bundle.gamma)?);

    attempt.stage = Stage::Hamiltonian;
    let search = find_hamiltonian_cycle(&bundle.gamma, opts.hamilton_budget)?;
    out.work += search.work;
    let order = match search.outcome {
        HamiltonOutcome::Found(c) => c.into_order(),
        HamiltonOutcome::NoCycle => {
            attempt.detail = "Γ is not Hamiltonian".into();
            out.bundle = Some(bundle);
            return Ok(None);
        }
        HamiltonOutcome::BudgetExhausted => {
            attempt.detail = format!("Hamiltonicity budget {} exhausted", opts.hamilton_budget);
            out.bundle = Some(bundle);
            return Ok(None);
        }
    };

    attempt.stage = Stage::Extension;
    let mut core = order;
    if bundle.case_tag == 2 {
        // x last, so the two free positions are the ones touching x
        let at = core.iter().position(|&v| v == bundle.x).expect("cycle covers x");
        core.rotate_left((at + 1) % n);
    }
    let table = build_candidates(&core, target, coloring)?;
    let reserved: BTreeMap<usize, u64> = (0..n)
        .filter_map(|i| bundle.reservation(core[i], core[(i + 1) % n]).map(|res| (i, res.edge)))
        .collect();
    let greedy = extend_greedy_ordered(&table, &reserved)?;
    attempt.greedy = Some(greedy.is_some());
    let cycle = match greedy.or_else(|| extend_matching(&table)) {
        Some(c) => c,
        None => {
            attempt.detail = "no distinct edge assignment along the cycle".into();
            out.bundle = Some(bundle);
            return Ok(None);
        }
    };
    if verify_berge_cycle(&cycle, coloring)? != Verdict::Valid {
        return Err(Error::InvalidCertificate("extension produced an invalid Berge-cycle".into()));
    }
    attempt.detail = if attempt.greedy == Some(true) { "ordered extension".into() } else { "matching fallback".into() };
    out.bundle = Some(bundle);
    Ok(Some(cycle))
}
