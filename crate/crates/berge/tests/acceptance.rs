//! One line per acceptance criterion. Ground truth is recomputed here from
//! first principles wherever the library's own answer is under test.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::SmallRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use berge::exhaust_parallel;
use berge_core::construct::fixtures::{case1_coloring, case2_coloring};
use berge_core::construct::{build_gamma_case2, constructive_find, witness_search};
use berge_core::extend::{extend_greedy_ordered, extend_matching, CandidateTable};
use berge_core::hamilton::{
    chvatal_check, closure_with_trace, find_hamiltonian_cycle, find_hamiltonian_cycle_with, transfer_cycle,
    HamiltonOutcome, Strategy,
};
use berge_core::harness::{exhaustive_verify, find_mono_berge, naive_oracle, paper_threshold, Shard};
use berge_core::shadow::{default_degree_bound, ColorProfile};
use berge_core::{
    verify_berge_cycle, BergeCycle, Coloring, EdgeIndexer, Error, Graph, HyperParams, Verdict, ViolationKind,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn params(n: usize, r: usize, k: u8) -> HyperParams {
    HyperParams::new(n, r, k).unwrap()
}

/// Colorings as base-k counters, edge 0 least significant.
fn all_colorings(p: HyperParams) -> impl Iterator<Item = Coloring> {
    let m = p.edge_count() as u32;
    let k = p.k() as u64;
    (0..k.pow(m)).map(move |mut v| {
        let colors = (0..m)
            .map(|_| {
                let d = (v % k) as u8 + 1;
                v /= k;
                d
            })
            .collect();
        Coloring::new(p, colors).unwrap()
    })
}

fn criterion_1() -> Outcome {
    let a = paper_threshold(5).map_err(|e| e.to_string())?;
    let b = paper_threshold(3).map_err(|e| e.to_string())?;
    ensure(a == 145_350 && b == 1188, || format!("got {a} and {b}"))?;
    Ok(format!("r=5 -> {a}, r=3 -> {b}"))
}

fn criterion_2() -> Outcome {
    let p = params(5, 4, 3);
    let one = exhaustive_verify(&p, Shard::WHOLE).map_err(|e| e.to_string())?;
    let eight = exhaust_parallel(&p, 8).map_err(|e| e.to_string())?;
    ensure((one.total, one.success, one.failure) == (243, 3, 240), || {
        format!("1 shard: {}/{}/{}", one.total, one.success, one.failure)
    })?;
    ensure(eight.shards == 8 && eight.same_outcome(&one), || "8-shard report differs".into())?;
    // oracle side: exactly the monochromatic colorings succeed
    let mut found = Vec::new();
    for c in all_colorings(p) {
        if naive_oracle(&c).unwrap().found() {
            found.push(c.colors().to_vec());
        }
    }
    let mono: Vec<Vec<u8>> = (1..=3).map(|c| vec![c; 5]).collect();
    ensure(found == mono, || format!("oracle successes {found:?}"))?;
    Ok("243 / 3 / 240, 1 and 8 shards identical, oracle agrees".into())
}

fn criterion_3() -> Outcome {
    let p = params(5, 3, 2);
    let rep = exhaust_parallel(&p, 8).map_err(|e| e.to_string())?;
    ensure(rep.total == 1024 && rep.success + rep.failure == 1024, || format!("total {}", rep.total))?;
    let mut disagreements = 0;
    let mut oracle_found = 0;
    for c in all_colorings(p) {
        let fast = find_mono_berge(&c, u64::MAX).unwrap();
        let slow = naive_oracle(&c).unwrap();
        if slow.found() {
            oracle_found += 1;
        }
        let ok = fast.verdict == slow.verdict
            && fast.cycle.as_ref().is_none_or(|cy| verify_berge_cycle(cy, &c).unwrap().is_valid());
        if !ok {
            disagreements += 1;
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} disagreements"))?;
    ensure(oracle_found == rep.success, || format!("oracle {oracle_found} vs exhaust {}", rep.success))?;
    Ok(format!("1024 classified, {} with a cycle, 0 disagreements", rep.success))
}

fn has_cycle(g: &Graph) -> bool {
    match find_hamiltonian_cycle_with(g, u64::MAX, Strategy::Plain).unwrap().outcome {
        HamiltonOutcome::Found(c) => {
            c.validate(g).unwrap();
            true
        }
        HamiltonOutcome::NoCycle => false,
        HamiltonOutcome::BudgetExhausted => unreachable!(),
    }
}

fn criterion_4() -> Outcome {
    let mut graphs = 0u64;
    let mut transfers = 0u64;
    for n in 3..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            graphs += 1;
            let trace = closure_with_trace(&g);
            let on_g = has_cycle(&g);
            let on_closure = has_cycle(&trace.graph);
            ensure(on_g == on_closure, || format!("n={n} mask={mask:#x}: G {on_g}, closure {on_closure}"))?;
            if !on_closure {
                continue;
            }
            let mut cert = match find_hamiltonian_cycle_with(&trace.graph, u64::MAX, Strategy::Plain).unwrap().outcome {
                HamiltonOutcome::Found(c) => c,
                _ => unreachable!(),
            };
            let mut current = trace.graph.clone();
            for &(u, v) in trace.added.iter().rev() {
                current.remove_edge(u, v).unwrap();
                cert = transfer_cycle(&current, u, v, &cert).map_err(|e| format!("n={n} mask={mask:#x}: {e}"))?;
                cert.validate(&current).map_err(|e| format!("n={n} mask={mask:#x}: transfer invalid: {e}"))?;
                transfers += 1;
            }
            ensure(current == g, || "peeling did not return to G".into())?;
            let direct = find_hamiltonian_cycle(&g, u64::MAX).unwrap();
            let ok = direct.certificate().is_some_and(|c| c.validate(&g).is_ok());
            ensure(ok, || format!("n={n} mask={mask:#x}: closure strategy failed"))?;
        }
    }
    Ok(format!("{graphs} graphs on 3..=7 vertices, {transfers} transfers validated"))
}

fn random_graph(rng: &mut SmallRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn criterion_5() -> Outcome {
    let mut rng = SmallRng::seed_from_u64(5);
    let (mut accepted, mut tried) = (0, 0);
    while accepted < 1000 {
        tried += 1;
        let n = rng.gen_range(3..=14);
        let density = rng.gen_range(0.3..1.0);
        let g = random_graph(&mut rng, n, density);
        if !chvatal_check(&g).unwrap() {
            continue;
        }
        accepted += 1;
        let s = find_hamiltonian_cycle(&g, u64::MAX).unwrap();
        let ok = s.certificate().is_some_and(|c| c.validate(&g).is_ok());
        ensure(ok, || format!("no valid certificate for a Chvatal graph on {n} vertices: {:?}", s.outcome))?;
    }
    let p = Graph::petersen();
    ensure(!chvatal_check(&p).unwrap(), || "Petersen passes Chvatal".into())?;
    let s = find_hamiltonian_cycle_with(&p, u64::MAX, Strategy::Plain).unwrap();
    ensure(s.outcome == HamiltonOutcome::NoCycle, || format!("Petersen: {:?}", s.outcome))?;
    Ok(format!("1000 Chvatal graphs certified ({tried} sampled), Petersen proven non-Hamiltonian"))
}

fn brute_sdr(lists: &[Vec<u64>], used: &mut Vec<u64>) -> bool {
    let i = used.len();
    if i == lists.len() {
        return true;
    }
    for &e in &lists[i] {
        if !used.contains(&e) {
            used.push(e);
            if brute_sdr(lists, used) {
                return true;
            }
            used.pop();
        }
    }
    false
}

fn criterion_6() -> Outcome {
    let mut rng = SmallRng::seed_from_u64(6);
    let (mut present, mut greedy_hits) = (0, 0);
    for t in 0..500 {
        let n = rng.gen_range(1..=8);
        let pool = rng.gen_range(1..=2 * n as u64 + 1);
        let mut core: Vec<usize> = (0..n).collect();
        core.shuffle(&mut rng);
        let lists: Vec<Vec<u64>> = (0..n)
            .map(|_| {
                let len = rng.gen_range(0..=pool.min(4) as usize);
                let mut l: Vec<u64> = (0..len).map(|_| rng.gen_range(0..pool)).collect();
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        let table = CandidateTable::from_lists(core, 1, lists.clone()).unwrap();
        let expected = brute_sdr(&lists, &mut Vec::new());
        let got = extend_matching(&table);
        ensure(got.is_some() == expected, || format!("table {t}: matching {} brute {expected}", got.is_some()))?;
        if let Some(cy) = &got {
            let distinct: BTreeSet<_> = cy.edges.iter().collect();
            let members = cy.edges.iter().enumerate().all(|(i, e)| lists[i].contains(e));
            ensure(distinct.len() == n && members, || format!("table {t}: bad matching output"))?;
            present += 1;
        }
        let mut reserved = BTreeMap::new();
        for (i, l) in lists.iter().enumerate() {
            if !l.is_empty() && rng.gen_bool(0.2) {
                reserved.insert(i, l[rng.gen_range(0..l.len())]);
            }
        }
        for res in [BTreeMap::new(), reserved] {
            if let Some(cy) = extend_greedy_ordered(&table, &res).unwrap() {
                greedy_hits += 1;
                ensure(expected, || format!("table {t}: greedy succeeded where no SDR exists"))?;
                ensure(res.iter().all(|(&i, &e)| cy.edges[i] == e), || format!("table {t}: reservation ignored"))?;
            }
        }
    }
    Ok(format!("500 tables, {present} with an SDR, {greedy_hits} greedy successes all backed by matching"))
}

fn criterion_7() -> Outcome {
    let c = case1_coloring();
    let out = constructive_find(&c, default_degree_bound(5)).map_err(|e| e.to_string())?;
    let (color, cycle) = out.found.ok_or_else(|| format!("nothing found; failed stage {:?}", out.failed_stage))?;
    ensure(color == 4, || format!("color {color}"))?;
    ensure(verify_berge_cycle(&cycle, &c).unwrap() == Verdict::Valid, || "cycle does not verify".into())?;
    // independent recheck
    let idx = EdgeIndexer::new(*c.params());
    let mut core = cycle.core.clone();
    core.sort_unstable();
    let distinct: BTreeSet<_> = cycle.edges.iter().collect();
    ensure(core == (0..12).collect::<Vec<_>>() && distinct.len() == 12, || "not Hamiltonian".into())?;
    for i in 0..12 {
        let e = idx.unrank(cycle.edges[i]).unwrap();
        let (a, b) = (cycle.core[i], cycle.core[(i + 1) % 12]);
        ensure(e.contains(a) && e.contains(b) && c.colors()[cycle.edges[i] as usize] == 4, || {
            format!("position {i} fails")
        })?;
    }
    Ok("color-4 Hamiltonian Berge-cycle on 12 vertices, verified twice".into())
}

fn criterion_8() -> Outcome {
    let c = case2_coloring();
    let p = *c.params();
    let (n, r) = (p.n(), p.r());
    let prof = ColorProfile::new(&c);
    let w = witness_search(&prof, 0).map_err(|e| e.to_string())?.ok_or("no witness")?;
    let b = match build_gamma_case2(&w, &prof) {
        Ok(b) => b,
        Err(e @ Error::StepExhausted { .. }) => return Ok(format!("build reported {e}")),
        Err(e) => return Err(e.to_string()),
    };
    let book = &b.bookkeeping;
    let idx = EdgeIndexer::new(p);
    let target = w.color(w.f + 1);
    ensure(b.target_color == target, || "target color".into())?;

    // U recomputed from the coloring; Y leaves out y_{f+1}
    let y: BTreeSet<usize> = w.y.iter().enumerate().filter(|(j, _)| *j != w.f).map(|(_, &v)| v).collect();
    let u: Vec<usize> = (0..n)
        .filter(|v| !y.contains(v) && *v != w.x)
        .filter(|&v| {
            let mut e: Vec<usize> = y.iter().copied().chain([w.x, v]).collect();
            e.sort_unstable();
            c.colors()[idx.rank(&e).unwrap() as usize] == target
        })
        .collect();
    ensure(book.u_set == u, || format!("U {:?} vs {u:?}", book.u_set))?;

    // A_1..A_{r-1} partition U with the prescribed sizes
    ensure(book.parts.len() == r - 1, || "wrong number of parts".into())?;
    let mut all: Vec<usize> = book.parts.concat();
    all.sort_unstable();
    ensure(all == u, || "parts do not partition U".into())?;
    ensure(book.parts[r - 2].len() == n / 2 + 1, || "|A_{r-1}|".into())?;
    ensure(book.parts[w.f].is_empty(), || "A_{f+1} nonempty".into())?;
    let balanced: Vec<usize> = (0..r - 2).filter(|&i| i != w.f).map(|i| book.parts[i].len()).collect();
    let (lo, hi) = (balanced.iter().min().unwrap(), balanced.iter().max().unwrap());
    ensure(hi - lo <= 1, || format!("unbalanced parts {balanced:?}"))?;
    for i in 1..r {
        ensure(b.gamma.degree(w.y(i)) >= book.parts[i - 1].len(), || format!("deg y_{i}"))?;
    }

    // reservations: injective, on Γ-edges, containment, target color
    let edges: BTreeSet<u64> = b.reserved.iter().map(|x| x.edge).collect();
    ensure(edges.len() == b.reserved.len(), || "reservation reused".into())?;
    for res in &b.reserved {
        let e = idx.unrank(res.edge).unwrap();
        ensure(b.gamma.has_edge(res.u, res.v), || format!("reservation on non-edge {}-{}", res.u, res.v))?;
        ensure(e.contains(res.u) && e.contains(res.v), || format!("edge {} misses its pair", res.edge))?;
        ensure(c.colors()[res.edge as usize] == target, || format!("edge {} off color", res.edge))?;
    }

    // degree > 2r for every processed u_i and w_i
    let processed: Vec<usize> = book.steps.iter().chain(&book.w_steps).map(|s| s.vertex).collect();
    ensure(book.steps.len() == book.ubar_first.len(), || "some u_i not processed".into())?;
    ensure(book.w_steps.len() == book.w_list.len().min(r), || "w_i count".into())?;
    for &v in &processed {
        ensure(b.gamma.degree(v) > 2 * r, || format!("vertex {v} has degree {}", b.gamma.degree(v)))?;
    }
    Ok(format!(
        "|U| = {}, parts {:?}, {} reservations, {} step vertices above 2r",
        u.len(),
        book.parts.iter().map(Vec::len).collect::<Vec<_>>(),
        b.reserved.len(),
        processed.len()
    ))
}

/// Random valid cycle by restarts over shuffled supersets.
fn random_cycle(rng: &mut SmallRng, c: &Coloring, color: Option<u8>) -> BergeCycle {
    let p = *c.params();
    let n = p.n();
    let idx = EdgeIndexer::new(p);
    loop {
        let mut core: Vec<usize> = (0..n).collect();
        core.shuffle(rng);
        let mut edges = Vec::new();
        for i in 0..n {
            let mut opts = idx.supersets_containing(&{
                let mut pair = [core[i], core[(i + 1) % n]];
                pair.sort_unstable();
                pair
            })
            .unwrap();
            opts.retain(|e| !edges.contains(e) && color.is_none_or(|col| c.colors()[*e as usize] == col));
            match opts.choose(rng) {
                Some(&e) => edges.push(e),
                None => break,
            }
        }
        if edges.len() == n {
            return BergeCycle::new(core, edges, color);
        }
    }
}

fn criterion_9() -> Outcome {
    let mut rng = SmallRng::seed_from_u64(9);
    let (mut dup, mut cont) = (0, 0);
    for t in 0..10_000 {
        let n = rng.gen_range(4..=9);
        let r = rng.gen_range(3..n);
        let p = params(n, r, 2);
        let c = if rng.gen_bool(0.5) {
            Coloring::uniform(p, 1).unwrap()
        } else {
            let colors = (0..p.edge_count()).map(|_| if rng.gen_bool(0.9) { 1 } else { 2 }).collect();
            Coloring::new(p, colors).unwrap()
        };
        let color = if c.colors().iter().all(|&x| x == 1) && rng.gen_bool(0.5) { Some(1) } else { None };
        let cy = random_cycle(&mut rng, &c, color);
        ensure(verify_berge_cycle(&cy, &c).unwrap().is_valid(), || format!("cycle {t} rejected"))?;
        let shift = rng.gen_range(0..n);
        for v in [cy.rotated(shift), cy.reflected(), cy.reflected().rotated(shift)] {
            ensure(verify_berge_cycle(&v, &c).unwrap().is_valid(), || format!("cycle {t}: symmetric image rejected"))?;
        }

        // duplicated edge at position j
        let (i, j) = {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            (a.min(b), a.max(b))
        };
        let mut m = cy.clone();
        m.edges[j] = m.edges[i];
        match verify_berge_cycle(&m, &c).unwrap() {
            Verdict::Invalid(v) if v.position == j && v.kind == ViolationKind::DuplicateEdge { first: i } => dup += 1,
            other => return Err(format!("cycle {t}: duplicate at {j} gave {other:?}")),
        }

        // containment broken at position i by an unused edge
        let (a, b2) = (cy.core[i], cy.core[(i + 1) % n]);
        let idx = EdgeIndexer::new(p);
        let spare: Vec<u64> = (0..p.edge_count())
            .filter(|e| !cy.edges.contains(e))
            .filter(|&e| {
                let s = idx.unrank(e).unwrap();
                !(s.contains(a) && s.contains(b2))
            })
            .collect();
        let Some(&e) = spare.choose(&mut rng) else { continue };
        let mut m = cy.clone();
        m.edges[i] = e;
        m.color = None;
        match verify_berge_cycle(&m, &c).unwrap() {
            Verdict::Invalid(v) if v.position == i && matches!(v.kind, ViolationKind::Containment { .. }) => cont += 1,
            other => return Err(format!("cycle {t}: broken containment at {i} gave {other:?}")),
        }
    }
    Ok(format!("10000 cycles invariant under rotation/reflection; {dup} duplicate and {cont} containment mutants rejected at the right index"))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let out = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS criterion {id}: {detail} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
