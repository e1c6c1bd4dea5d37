//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Set `CFCOLOR_SAMPLE_N9=1` to replace the full n = 9 labeled-tree
//! enumeration with 10,000 seeded random Prüfer sequences; the run reports
//! when it does so.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cfcolor::bipartite::{
    bipartite_scf_coloring, check_certificate, extend_to_cf, is_minimal_y_dominating,
};
use cfcolor::general::{
    cycle_cf_coloring, greedy_vertex_coloring, recursive_scf_coloring, scf_bound,
};
use cfcolor::generators::{self, SplitMix64};
use cfcolor::oracle::{exact_cf_index, exact_scf_index, sandwich_check, OracleBudget};
use cfcolor::tree::{coloring_from_f, decide_tree_two, tree_cf_index};
use cfcolor::{verify_cf, EdgeColoring, Graph, Side};

// ---------------------------------------------------------------------------
// Independent oracles. None of these call into the code paths they check.

/// Per-edge recount of the satisfaction predicate; `None` is uncolored.
fn recount_all_satisfied(g: &Graph, colors: &[Option<u32>]) -> bool {
    (0..g.edge_count()).all(|e| {
        let (u, v) = g.endpoints(e);
        let hood: Vec<usize> = (0..g.edge_count())
            .filter(|&f| {
                let (a, b) = g.endpoints(f);
                a == u || a == v || b == u || b == v
            })
            .collect();
        hood.iter().filter_map(|&f| colors[f]).any(|c| {
            hood.iter().filter(|&&f| colors[f] == Some(c)).count() == 1
        })
    })
}

/// Smallest k whose full k^m (or (k+1)^m with an uncolored symbol) space
/// contains a satisfying coloring; no symmetry pruning.
fn naive_index(g: &Graph, partial: bool) -> u32 {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    for k in 1..=m as u32 {
        let base = if partial { k + 1 } else { k };
        let total = (base as u64).pow(m as u32);
        for code in 0..total {
            let mut x = code;
            let colors: Vec<Option<u32>> = (0..m)
                .map(|_| {
                    let d = (x % base as u64) as u32;
                    x /= base as u64;
                    if partial {
                        (d > 0).then_some(d)
                    } else {
                        Some(d + 1)
                    }
                })
                .collect();
            if recount_all_satisfied(g, &colors) {
                return k;
            }
        }
    }
    unreachable!("m distinct colors always work")
}

/// Bitmask view of a small tree for enumerating all edge subsets.
struct TreeMasks {
    m: usize,
    /// Closed neighborhood of each edge.
    hood: Vec<u32>,
    /// Incident edges of each vertex.
    incident: Vec<u32>,
    ends: Vec<(usize, usize)>,
}

impl TreeMasks {
    fn new(t: &Graph) -> Self {
        let m = t.edge_count();
        let mut incident = vec![0u32; t.vertex_count()];
        for (e, &(u, v)) in t.edges().iter().enumerate() {
            incident[u] |= 1 << e;
            incident[v] |= 1 << e;
        }
        let ends = t.edges().to_vec();
        let hood = ends.iter().map(|&(u, v)| incident[u] | incident[v]).collect();
        TreeMasks { m, hood, incident, ends }
    }

    fn all(&self) -> u32 {
        (1u32 << self.m) - 1
    }

    /// Color 1 on `f`, color 2 elsewhere: is every edge satisfied?
    fn two_coloring_cf(&self, f: u32) -> bool {
        let rest = self.all() & !f;
        self.hood
            .iter()
            .all(|&h| (h & f).count_ones() == 1 || (h & rest).count_ones() == 1)
    }

    /// The degree conditions on every edge, evaluated literally.
    fn conditions_hold(&self, f: u32) -> bool {
        if f == 0 || f == self.all() {
            return false;
        }
        let d_f = |v: usize| (self.incident[v] & f).count_ones() as i64;
        let d_t = |v: usize| self.incident[v].count_ones() as i64;
        self.ends.iter().enumerate().all(|(e, &(u, v))| {
            let sum_f = d_f(u) + d_f(v);
            let sum_rest = (d_t(u) - d_f(u)) + (d_t(v) - d_f(v));
            if f >> e & 1 == 1 {
                sum_f == 2 || sum_rest == 1
            } else {
                sum_f == 1 || sum_rest == 2
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Instance corpora.

fn bipartite_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let ps = [0.05, 0.2, 0.5];
    for i in 0..500u64 {
        let mut r = SplitMix64::new(0xB1_0000 + i);
        let nx = 1 + r.next_below(200) as usize;
        let ny = 1 + r.next_below(200) as usize;
        let p = ps[(i % 3) as usize];
        out.push((
            format!("random_bipartite({nx},{ny},{p},{i})"),
            generators::random_bipartite(nx, ny, p, i),
        ));
    }
    for n in 1..=8 {
        for m in 1..=n {
            out.push((format!("K_{{{n},{m}}}"), generators::complete_bipartite(n, m).unwrap()));
        }
    }
    out
}

/// Named small families.
fn named_small() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=9 {
        out.push((format!("P_{n}"), generators::path(n).unwrap()));
    }
    for n in 3..=10 {
        out.push((format!("C_{n}"), generators::cycle(n).unwrap()));
    }
    for l in 1..=8 {
        out.push((format!("K_{{1,{l}}}"), generators::star(l).unwrap()));
    }
    for n in 2..=6 {
        out.push((format!("K_{n}"), generators::complete(n).unwrap()));
    }
    for n in 1..=5 {
        for m in 1..=n {
            out.push((format!("K_{{{n},{m}}}"), generators::complete_bipartite(n, m).unwrap()));
        }
    }
    out
}

/// 200 seeded small random graphs: half general, half bipartite.
fn small_random() -> Vec<(String, Graph)> {
    (0..200u64)
        .map(|i| {
            let mut r = SplitMix64::new(0x5A_0000 + i);
            if i % 2 == 0 {
                let n = 3 + r.next_below(5) as usize;
                (format!("gnp({n},0.4,{i})"), generators::random_gnp(n, 0.4, i))
            } else {
                let nx = 1 + r.next_below(4) as usize;
                let ny = 1 + r.next_below(4) as usize;
                (
                    format!("random_bipartite({nx},{ny},0.5,{i})"),
                    generators::random_bipartite(nx, ny, 0.5, i),
                )
            }
        })
        .filter(|(_, g)| g.edge_count() > 0)
        .collect()
}

// ---------------------------------------------------------------------------

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: String) -> Outcome {
    Outcome { ok: true, detail }
}

fn fail(detail: String) -> Outcome {
    Outcome { ok: false, detail }
}

fn criterion_bipartite_bound() -> Outcome {
    let mut max_partial = 0;
    let mut max_total = 0;
    let corpus = bipartite_corpus();
    for (name, g) in &corpus {
        let b = g.bipartition().bipartite().expect("generated graphs are bipartite");
        let (partial, _) = match bipartite_scf_coloring(g, &b) {
            Ok(x) => x,
            Err(e) => return fail(format!("{name}: {e}")),
        };
        let total = match extend_to_cf(g, &partial) {
            Ok(t) => t,
            Err(e) => return fail(format!("{name}: {e}")),
        };
        max_partial = max_partial.max(partial.colors_used());
        max_total = max_total.max(total.colors_used());
        if partial.colors_used() > 2 || total.colors_used() > 3 || !total.is_total() {
            return fail(format!("{name}: {} / {} colors", partial.colors_used(), total.colors_used()));
        }
        for c in [&partial, &total] {
            if !verify_cf(g, c).unwrap().all_satisfied() {
                return fail(format!("{name}: verifier rejects"));
            }
        }
        // Each Y vertex lies on exactly one colored edge.
        for y in b.vertices_on(Side::Y) {
            let colored = g.incident(y).iter().filter(|&&(_, e)| partial.get(e).is_some()).count();
            if colored != 1 {
                return fail(format!("{name}: Y vertex {y} has {colored} colored edges"));
            }
        }
        if partial.colored_count() != b.vertices_on(Side::Y).count() {
            return fail(format!("{name}: colored edge count differs from |Y|"));
        }
    }
    // The independent recount on the smaller half of the corpus.
    for (name, g) in corpus.iter().filter(|(_, g)| g.edge_count() <= 400) {
        let total = cfcolor::bipartite_cf_coloring(g).unwrap();
        if !recount_all_satisfied(g, total.assignment()) {
            return fail(format!("{name}: recount rejects"));
        }
    }
    pass(format!(
        "{} instances, max colors partial {max_partial} / total {max_total}",
        corpus.len()
    ))
}

fn criterion_certificates() -> Outcome {
    let corpus = bipartite_corpus();
    for (name, g) in &corpus {
        let b = g.bipartition().bipartite().unwrap();
        let (_, cert) = bipartite_scf_coloring(g, &b).unwrap();
        if !check_certificate(g, &b, &cert) {
            return fail(format!("{name}: certificate rejected"));
        }
        if !is_minimal_y_dominating(g, &b, &cert.dominators) {
            return fail(format!("{name}: D not minimal"));
        }
        // Removal test straight from the definition.
        let y_side: Vec<usize> = b.vertices_on(Side::Y).collect();
        for &x in &cert.dominators {
            let others: Vec<usize> = cert.dominators.iter().copied().filter(|&d| d != x).collect();
            let dominated = y_side.iter().all(|&y| g.neighbors(y).any(|w| others.contains(&w)));
            if dominated {
                return fail(format!("{name}: {x} removable from D"));
            }
        }
        let mut owners = vec![0usize; g.vertex_count()];
        for ys in cert.private.values() {
            if ys.is_empty() {
                return fail(format!("{name}: empty private set"));
            }
            for &y in ys {
                owners[y] += 1;
            }
        }
        if owners.iter().any(|&c| c > 1) {
            return fail(format!("{name}: private sets overlap"));
        }
        let mut touched = vec![false; g.vertex_count()];
        for &e in &cert.matching {
            let (u, v) = g.endpoints(e);
            if touched[u] || touched[v] {
                return fail(format!("{name}: M is not a matching"));
            }
            touched[u] = true;
            touched[v] = true;
        }
        if cert.dominators.iter().any(|&x| !touched[x]) {
            return fail(format!("{name}: M does not cover D"));
        }
    }
    pass(format!("{} certificates", corpus.len()))
}

fn ceil_log2(x: u32) -> u32 {
    (0..).find(|&t| 1u32 << t >= x).unwrap()
}

fn criterion_exactness_anchors() -> Outcome {
    let budget = OracleBudget::default();
    let cf = |g: &Graph, k: u32| exact_cf_index(g, k, budget).unwrap().value();
    for (n, m) in [(3, 3), (3, 4)] {
        let got = cf(&generators::complete_bipartite(n, m).unwrap(), 4);
        if got != Some(3) {
            return fail(format!("K_{{{n},{m}}}: {got:?}"));
        }
    }
    for n in 3..=10 {
        let got = cf(&generators::cycle(n).unwrap(), 3);
        if got != Some(2) {
            return fail(format!("C_{n}: {got:?}"));
        }
    }
    let mut clique_values = Vec::new();
    for n in 2..=6u32 {
        let bound = ceil_log2(n - 1) + 1;
        let got = cf(&generators::complete(n as usize).unwrap(), bound);
        match got {
            Some(v) if v <= bound => clique_values.push(format!("K_{n}={v}")),
            _ => return fail(format!("K_{n}: {got:?} above {bound}")),
        }
    }
    let mut small_bipartite: Vec<(String, Graph)> = named_small()
        .into_iter()
        .chain(small_random())
        .chain(bipartite_corpus())
        .filter(|(_, g)| g.edge_count() <= 10 && g.bipartition().bipartite().is_some())
        .collect();
    for n in 3..=7 {
        for (code, t) in generators::all_labeled_trees(n).unwrap() {
            small_bipartite.push((format!("tree {code:?}"), t));
        }
    }
    for (name, g) in &small_bipartite {
        match exact_scf_index(g, 3, budget).unwrap().value() {
            Some(v) if v <= 2 => {}
            other => return fail(format!("{name}: scf {other:?}")),
        }
    }
    pass(format!(
        "K33=3 K34=3 C3..C10=2 {} ; scf<=2 on {} bipartite graphs",
        clique_values.join(" "),
        small_bipartite.len()
    ))
}

fn sandwich_corpus() -> Vec<(String, Graph)> {
    named_small()
        .into_iter()
        .chain(small_random())
        .filter(|(_, g)| g.edge_count() <= 8)
        .collect()
}

fn criterion_sandwich() -> Outcome {
    let corpus = sandwich_corpus();
    for (name, g) in &corpus {
        match sandwich_check(g, OracleBudget::default()) {
            Ok(true) => {}
            other => return fail(format!("{name}: {other:?}")),
        }
    }
    pass(format!("{} graphs", corpus.len()))
}

#[derive(Default)]
struct TreeTally {
    trees: u64,
    index3: u64,
    smallest_index3: Option<(usize, Vec<usize>)>,
}

fn check_tree(code: &[usize], t: &Graph, tally: &mut TreeTally) -> Result<(), String> {
    let masks = TreeMasks::new(t);
    let mut any_f = false;
    for f in 0..=masks.all() {
        let by_conditions = masks.conditions_hold(f);
        let proper = f != 0 && f != masks.all();
        // Forward and converse directions over every subset at once.
        if proper && by_conditions != masks.two_coloring_cf(f) {
            return Err(format!("{code:?}: conditions and coloring disagree on {f:#b}"));
        }
        any_f |= by_conditions;
    }
    let dp = decide_tree_two(t).map_err(|e| e.to_string())?;
    if dp.is_some() != any_f {
        return Err(format!("{code:?}: DP {} vs enumeration {any_f}", dp.is_some()));
    }
    let index = tree_cf_index(t).map_err(|e| e.to_string())?;
    let exact = exact_cf_index(t, 3, OracleBudget::default()).unwrap().value();
    if exact != Some(index as u32) {
        return Err(format!("{code:?}: index {index} vs oracle {exact:?}"));
    }
    if let Some(f) = dp {
        let c = coloring_from_f(t, &f).map_err(|e| e.to_string())?;
        if !verify_cf(t, &c).unwrap().all_satisfied() {
            return Err(format!("{code:?}: witness coloring fails"));
        }
    }
    if index == 3 {
        tally.index3 += 1;
        if tally.smallest_index3.is_none() {
            tally.smallest_index3 = Some((t.vertex_count(), code.to_vec()));
        }
    }
    tally.trees += 1;
    Ok(())
}

fn criterion_tree_round_trip() -> Outcome {
    let sample_n9 = std::env::var("CFCOLOR_SAMPLE_N9").is_ok_and(|v| v == "1");
    let mut tally = TreeTally::default();
    let mut per_n = Vec::new();
    for n in 3..=9 {
        let before = tally.index3;
        if n == 9 && sample_n9 {
            for s in 0..10_000u64 {
                let (code, t) = generators::random_tree_with_code(9, 0x7EE_0000 + s).unwrap();
                if let Err(e) = check_tree(&code, &t, &mut tally) {
                    return fail(e);
                }
            }
            per_n.push(format!("n=9: SAMPLED 10000, {} index-3", tally.index3 - before));
            continue;
        }
        let mut count = 0u64;
        for (code, t) in generators::all_labeled_trees(n).unwrap() {
            if let Err(e) = check_tree(&code, &t, &mut tally) {
                return fail(e);
            }
            count += 1;
        }
        let expected = (n as u64).pow(n as u32 - 2);
        if count != expected {
            return fail(format!("n={n}: enumerated {count}, expected {expected}"));
        }
        per_n.push(format!("n={n}: {count} trees, {} index-3", tally.index3 - before));
    }
    let smallest = match &tally.smallest_index3 {
        Some((n, code)) => format!("smallest index-3 tree n={n} prufer {code:?}"),
        None => "no index-3 tree found".to_string(),
    };
    pass(format!("{} trees [{}]; {smallest}", tally.trees, per_n.join("; ")))
}

fn criterion_general_bound() -> Outcome {
    let ps = [0.1, 0.3, 0.5];
    let mut worst = 0.0f64;
    for i in 0..200u64 {
        let mut r = SplitMix64::new(0x6E_0000 + i);
        let n = 2 + r.next_below(99) as usize;
        let p = ps[(i % 3) as usize];
        let g = generators::random_gnp(n, p, i);
        if g.edge_count() == 0 {
            continue;
        }
        let vc = greedy_vertex_coloring(&g);
        let partial = recursive_scf_coloring(&g, &vc).unwrap();
        let total = extend_to_cf(&g, &partial).unwrap();
        let bound = scf_bound(vc.k()) as usize;
        if partial.colors_used() > bound || total.colors_used() > bound + 1 {
            return fail(format!("gnp({n},{p},{i}): {} colors, k={}", total.colors_used(), vc.k()));
        }
        if !verify_cf(&g, &total).unwrap().all_satisfied() || !verify_cf(&g, &partial).unwrap().all_satisfied() {
            return fail(format!("gnp({n},{p},{i}): verifier rejects"));
        }
        if g.edge_count() <= 600 && !recount_all_satisfied(&g, total.assignment()) {
            return fail(format!("gnp({n},{p},{i}): recount rejects"));
        }
        worst = worst.max(total.colors_used() as f64 / (bound + 1) as f64);
    }
    pass(format!("200 graphs, max colors/bound ratio {worst:.2}"))
}

fn criterion_cycles() -> Outcome {
    for n in 3..=200 {
        let g = generators::cycle(n).unwrap();
        let c = cycle_cf_coloring(n).unwrap();
        if c.colors_used() != 2 || !c.is_total() || !verify_cf(&g, &c).unwrap().all_satisfied() {
            return fail(format!("C_{n}"));
        }
        if n <= 30 && !recount_all_satisfied(&g, c.assignment()) {
            return fail(format!("C_{n}: recount rejects"));
        }
    }
    // One color never works on a cycle.
    for n in 3..=10 {
        let g = generators::cycle(n).unwrap();
        let mono = EdgeColoring::total(&vec![1; n]).unwrap();
        if verify_cf(&g, &mono).unwrap().all_satisfied() {
            return fail(format!("C_{n} accepted one color"));
        }
    }
    pass("C_3..C_200 with exactly 2 colors".into())
}

fn criterion_oracle_self_consistency() -> Outcome {
    let budget = OracleBudget::default();
    let corpus: Vec<(String, Graph)> = sandwich_corpus()
        .into_iter()
        .filter(|(_, g)| g.edge_count() <= 7)
        .collect();
    for (name, g) in &corpus {
        let m = g.edge_count() as u32;
        let cf = exact_cf_index(g, m, budget).unwrap().value().unwrap();
        let scf = exact_scf_index(g, m, budget).unwrap().value().unwrap();
        let (ncf, nscf) = (naive_index(g, false), naive_index(g, true));
        if (cf, scf) != (ncf, nscf) {
            return fail(format!("{name}: pruned ({cf},{scf}) vs naive ({ncf},{nscf})"));
        }
    }
    pass(format!("{} graphs, both indices", corpus.len()))
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, Duration, Check); 8] = [
        (1, "bipartite bound", Duration::from_secs(10), criterion_bipartite_bound),
        (2, "domination certificates", Duration::from_secs(60), criterion_certificates),
        (3, "exactness anchors", Duration::from_secs(60), criterion_exactness_anchors),
        (4, "sandwich scf <= cf <= scf+1", Duration::from_secs(60), criterion_sandwich),
        (5, "tree characterization round trip", Duration::from_secs(600), criterion_tree_round_trip),
        (6, "general bound", Duration::from_secs(30), criterion_general_bound),
        (7, "cycle construction", Duration::from_secs(1), criterion_cycles),
        (8, "oracle self-consistency", Duration::from_secs(120), criterion_oracle_self_consistency),
    ];
    let mut failures = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let mut out = check();
        let elapsed = start.elapsed();
        if out.ok && elapsed > limit {
            out = fail(format!("{} (took {elapsed:.2?}, limit {limit:?})", out.detail));
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {id}. {name}: {} ({elapsed:.2?})", out.detail);
        if !out.ok {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all 8 criteria passed");
        ExitCode::SUCCESS
    }
}
