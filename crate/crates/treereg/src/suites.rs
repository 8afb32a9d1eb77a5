//! The named verification suites behind `treereg verify`, also driven
//! directly by the acceptance tests. Every suite runs a deterministic corpus
//! (seeded or exhaustive), evaluates each instance independently, and reports
//! per-instance outcomes in a fixed order regardless of `jobs`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::betti::FieldSpec;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::generate::{
    self, enumerate_brooms, enumerate_perfect_trees, enumerate_rooted_trees, perfect_knary_tree,
    random_rooted_tree, random_simplicial_forest, GrowthMode,
};
use crate::koszul::{self, OracleConfig, StrandCache};
use crate::monomial::MonomialIdeal;
use crate::powers;
use crate::report::Caps;
use crate::rng::Rng;
use crate::rooted::{self, RegCalculator, RootedTree};

/// Outcome classification for one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A configured cap stopped the computation; no verdict was reached.
    Resource,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcome {
    pub id: String,
    pub status: Status,
    pub detail: serde_json::Value,
}

impl InstanceOutcome {
    fn from_result(id: String, result: Result<(bool, serde_json::Value)>) -> Self {
        match result {
            Ok((true, detail)) => InstanceOutcome { id, status: Status::Pass, detail },
            Ok((false, detail)) => InstanceOutcome { id, status: Status::Fail, detail },
            Err(Error::ResourceCap(msg)) => InstanceOutcome {
                id,
                status: Status::Resource,
                detail: serde_json::json!({ "resource": msg }),
            },
            Err(other) => InstanceOutcome {
                id,
                status: Status::Fail,
                detail: serde_json::json!({ "error": other.to_string() }),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub passed: bool,
    pub total: usize,
    pub failures: usize,
    pub resource_errors: usize,
    pub findings: usize,
    pub summary: String,
    pub instances: Vec<InstanceOutcome>,
}

impl SuiteOutcome {
    fn collect(suite: &str, instances: Vec<InstanceOutcome>) -> Self {
        let total = instances.len();
        let failures = instances.iter().filter(|i| i.status == Status::Fail).count();
        let resource_errors = instances
            .iter()
            .filter(|i| i.status == Status::Resource)
            .count();
        let findings = instances
            .iter()
            .filter(|i| i.detail.get("finding").and_then(|f| f.as_bool()) == Some(true))
            .count();
        let passed = failures == 0 && resource_errors == 0;
        let summary = format!(
            "{suite}: {}/{} passed, {} failed, {} stopped by caps{}",
            total - failures - resource_errors,
            total,
            failures,
            resource_errors,
            if findings > 0 {
                format!(", {findings} findings")
            } else {
                String::new()
            }
        );
        SuiteOutcome {
            suite: suite.to_string(),
            passed,
            total,
            failures,
            resource_errors,
            findings,
            summary,
            instances,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("suite outcome serializes")
    }
}

/// Shared knobs for every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub s_max: u32,
    pub field: FieldSpec,
    pub caps: Caps,
    pub jobs: usize,
    pub max_facets: usize,
    /// Override the per-suite default corpus size.
    pub count: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            s_max: 2,
            field: FieldSpec::Rationals,
            caps: Caps::default(),
            jobs: 1,
            max_facets: 6,
            count: None,
        }
    }
}

impl SuiteConfig {
    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            field: self.field,
            max_lattice: self.caps.max_lattice,
            max_strand_faces: self.caps.max_strand_faces,
            max_scan_work: self.caps.max_scan_work,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fixtures,
    TheoremA,
    LemmaColon,
    LinearQuotients,
    PerfectFormula,
    BroomFormula,
    RecursionOracle,
    PowerFormulas,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Fixtures,
        Suite::TheoremA,
        Suite::LemmaColon,
        Suite::LinearQuotients,
        Suite::PerfectFormula,
        Suite::BroomFormula,
        Suite::RecursionOracle,
        Suite::PowerFormulas,
        Suite::Bounds,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Fixtures => "fixtures",
            Suite::TheoremA => "theoremA",
            Suite::LemmaColon => "lemmaColon",
            Suite::LinearQuotients => "linearQuotients",
            Suite::PerfectFormula => "perfectFormula",
            Suite::BroomFormula => "broomFormula",
            Suite::RecursionOracle => "recursionOracle",
            Suite::PowerFormulas => "powerFormulas",
            Suite::Bounds => "bounds",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteOutcome {
    match suite {
        Suite::Fixtures => run_fixtures(cfg),
        Suite::TheoremA => run_theorem_a(cfg),
        Suite::LemmaColon => run_lemma_colon(cfg),
        Suite::LinearQuotients => run_linear_quotients(cfg),
        Suite::PerfectFormula => run_perfect_formula(cfg),
        Suite::BroomFormula => run_broom_formula(cfg),
        Suite::RecursionOracle => run_recursion_oracle(cfg),
        Suite::PowerFormulas => run_power_formulas(cfg),
        Suite::Bounds => run_bounds(cfg),
    }
}

/// Run `f` over the items on `jobs` workers, keeping the input order.
fn run_instances<T, F>(jobs: usize, items: Vec<(String, T)>, f: F) -> Vec<InstanceOutcome>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<(bool, serde_json::Value)> + Send + Sync,
{
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }
    let jobs = jobs.max(1).min(n);
    if jobs == 1 {
        return items
            .into_iter()
            .map(|(id, item)| InstanceOutcome::from_result(id, f(&item)))
            .collect();
    }
    let slots: Mutex<Vec<Option<InstanceOutcome>>> = Mutex::new((0..n).map(|_| None).collect());
    let cursor = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let idx = cursor.fetch_add(1, Ordering::Relaxed);
                if idx >= n {
                    break;
                }
                let (id, item) = &items[idx];
                let outcome = InstanceOutcome::from_result(id.clone(), f(item));
                slots.lock().expect("slots poisoned")[idx] = Some(outcome);
            });
        }
    });
    slots
        .into_inner()
        .expect("slots poisoned")
        .into_iter()
        .map(|o| o.expect("every slot filled"))
        .collect()
}

fn equal_tables_across_characteristics(
    ideal: &MonomialIdeal,
    caps: &Caps,
) -> Result<(bool, serde_json::Value)> {
    let base = OracleConfig {
        field: FieldSpec::Rationals,
        max_lattice: caps.max_lattice,
        max_strand_faces: caps.max_strand_faces,
        max_scan_work: caps.max_scan_work,
    };
    let zero = koszul::graded_betti(ideal, &base)?;
    let modular = koszul::graded_betti(ideal, &OracleConfig { field: FieldSpec::Prime(32003), ..base })?;
    let generator_rows_match = zero.generator_count() == ideal.num_generators() as u64;
    Ok((
        zero == modular && generator_rows_match,
        serde_json::json!({
            "char0": zero.to_json_map(),
            "char32003": modular.to_json_map(),
        }),
    ))
}

/// Named ideals plus oracle self-consistency: the characteristic-0 statements
/// about both fixtures, the characteristic-2 discriminator, and agreement of
/// the tables over QQ and F_32003 on a small forest corpus.
fn run_fixtures(cfg: &SuiteConfig) -> SuiteOutcome {
    let caps = cfg.caps;
    let char0 = OracleConfig {
        field: FieldSpec::Rationals,
        max_lattice: caps.max_lattice,
        max_strand_faces: caps.max_strand_faces,
        max_scan_work: caps.max_scan_work,
    };
    let char2 = OracleConfig { field: FieldSpec::Prime(2), ..char0 };

    enum Fixture {
        TeraiLinear,
        TeraiSquare,
        TeraiSquareRegularity,
        TeraiChar2,
        SturmfelsQuotients,
        SturmfelsImplication,
        SturmfelsSquare,
        CharAgreementComplex(SimplicialComplex),
        CharAgreementTree(RootedTree, u32),
    }

    let mut items: Vec<(String, Fixture)> = vec![
        ("terai-linear-resolution-char0".into(), Fixture::TeraiLinear),
        ("terai-square-loses-linearity-char0".into(), Fixture::TeraiSquare),
        ("terai-square-regularity-above-degree".into(), Fixture::TeraiSquareRegularity),
        ("terai-not-linear-char2".into(), Fixture::TeraiChar2),
        ("sturmfels-linear-quotients-in-given-order".into(), Fixture::SturmfelsQuotients),
        ("sturmfels-quotients-imply-linear-resolution".into(), Fixture::SturmfelsImplication),
        ("sturmfels-square-not-linear".into(), Fixture::SturmfelsSquare),
    ];
    let mut rng = Rng::new(cfg.seed);
    for k in 0..10 {
        let complex = random_simplicial_forest(&mut rng, 5, 2, GrowthMode::Forest);
        items.push((format!("characteristic-agreement-forest-{k}"), Fixture::CharAgreementComplex(complex)));
    }
    for k in 0..6 {
        let tree = random_rooted_tree(&mut rng, 8);
        let t = 2 + (k % 2) as u32;
        items.push((format!("characteristic-agreement-path-ideal-{k}"), Fixture::CharAgreementTree(tree, t)));
    }

    let instances = run_instances(cfg.jobs, items, |fixture| match fixture {
        Fixture::TeraiLinear => {
            let value = koszul::has_linear_resolution(&generate::terai_ideal(), &char0)?;
            Ok((value, serde_json::json!({ "linear": value })))
        }
        Fixture::TeraiSquare => {
            let square = generate::terai_ideal().power(2, caps.max_power_generators)?;
            let value = koszul::has_linear_resolution(&square, &char0)?;
            Ok((!value, serde_json::json!({ "linear": value })))
        }
        Fixture::TeraiSquareRegularity => {
            let square = generate::terai_ideal().power(2, caps.max_power_generators)?;
            let reg = koszul::regularity_of_ideal(&square, &char0)?;
            Ok((reg > 6, serde_json::json!({ "regularity": reg })))
        }
        Fixture::TeraiChar2 => {
            let value = koszul::has_linear_resolution(&generate::terai_ideal(), &char2)?;
            Ok((!value, serde_json::json!({ "linear_char2": value })))
        }
        Fixture::SturmfelsQuotients => {
            let value = koszul::has_linear_quotients(&generate::sturmfels_ordered_generators())?;
            Ok((value, serde_json::json!({ "linear_quotients": value })))
        }
        Fixture::SturmfelsImplication => {
            // Ordered linear quotients on an equigenerated ideal force a
            // linear resolution; both sides are computed and compared.
            let quotients = koszul::has_linear_quotients(&generate::sturmfels_ordered_generators())?;
            let ideal = MonomialIdeal::minimalize(6, generate::sturmfels_ordered_generators())?;
            let resolution = koszul::has_linear_resolution(&ideal, &char0)?;
            Ok((
                !quotients || resolution,
                serde_json::json!({ "linear_quotients": quotients, "linear_resolution": resolution }),
            ))
        }
        Fixture::SturmfelsSquare => {
            let ideal = MonomialIdeal::minimalize(6, generate::sturmfels_ordered_generators())?;
            let square = ideal.power(2, caps.max_power_generators)?;
            let value = koszul::has_linear_resolution(&square, &char0)?;
            Ok((!value, serde_json::json!({ "linear": value })))
        }
        Fixture::CharAgreementComplex(complex) => {
            equal_tables_across_characteristics(&complex.facet_ideal(), &caps)
        }
        Fixture::CharAgreementTree(tree, t) => {
            let ideal = tree.t_path_ideal(*t);
            if ideal.is_zero() {
                return Ok((true, serde_json::json!({ "zero_ideal": true })));
            }
            equal_tables_across_characteristics(&ideal, &caps)
        }
    });
    SuiteOutcome::collect("fixtures", instances)
}

/// Six-way equivalence over a seeded forest corpus.
fn run_theorem_a(cfg: &SuiteConfig) -> SuiteOutcome {
    let count = cfg.count.unwrap_or(200);
    let mut rng = Rng::new(cfg.seed);
    let mut items = Vec::with_capacity(count);
    for k in 0..count {
        let mode = match k % 3 {
            0 => GrowthMode::Forest,
            1 => GrowthMode::Tree,
            _ => GrowthMode::PureCodimOneTree,
        };
        let complex = random_simplicial_forest(&mut rng, cfg.max_facets, 3, mode);
        items.push((format!("forest-{k}"), complex));
    }
    let oracle = cfg.oracle();
    let caps = cfg.caps;
    let s_max = cfg.s_max.max(2);
    let instances = run_instances(cfg.jobs, items, |complex| {
        let report = powers::verify_equivalence(complex, s_max, &oracle, caps.max_power_generators)?;
        let detail = serde_json::to_value(&report).expect("report serializes");
        Ok((report.passed, detail))
    });
    SuiteOutcome::collect("theoremA", instances)
}

/// Colon identities along a good-leaf order on a seeded forest corpus.
fn run_lemma_colon(cfg: &SuiteConfig) -> SuiteOutcome {
    let count = cfg.count.unwrap_or(100);
    let mut rng = Rng::new(cfg.seed);
    let mut items = Vec::with_capacity(count);
    for k in 0..count {
        let mode = if k % 2 == 0 { GrowthMode::Forest } else { GrowthMode::Tree };
        let complex = random_simplicial_forest(&mut rng, cfg.max_facets.min(5), 3, mode);
        items.push((format!("forest-{k}"), complex));
    }
    let caps = cfg.caps;
    let s_max = cfg.s_max.max(2);
    let instances = run_instances(cfg.jobs, items, |complex| {
        let ordering = complex
            .good_leaf_order()
            .ok_or_else(|| Error::InvariantViolation("generator must produce forests".into()))?;
        let mut all = true;
        let mut details = Vec::new();
        for s in 1..=s_max {
            let report =
                powers::verify_colon_identities(complex, &ordering, s, caps.max_power_generators)?;
            all &= report.passed;
            details.push(serde_json::to_value(&report).expect("report serializes"));
        }
        Ok((all, serde_json::Value::Array(details)))
    });
    SuiteOutcome::collect("lemmaColon", instances)
}

/// Linear quotients of the canonical power order, plus the witness recipe, on
/// every generated tree satisfying the intersection property.
fn run_linear_quotients(cfg: &SuiteConfig) -> SuiteOutcome {
    let wanted = cfg.count.unwrap_or(60);
    let mut rng = Rng::new(cfg.seed);
    let mut items = Vec::new();
    let mut attempts = 0;
    while items.len() < wanted && attempts < wanted * 30 {
        attempts += 1;
        let mode = if attempts % 3 == 0 { GrowthMode::Tree } else { GrowthMode::PureCodimOneTree };
        let complex = random_simplicial_forest(&mut rng, cfg.max_facets, 3, mode);
        if complex.intersection_property().holds() {
            items.push((format!("ip-tree-{}", items.len()), complex));
        }
    }
    let caps = cfg.caps;
    let s_max = cfg.s_max.max(3);
    let instances = run_instances(cfg.jobs, items, |complex| {
        let mut all = true;
        let mut details = Vec::new();
        for s in 1..=s_max {
            let report = powers::verify_linear_quotients_power(complex, s, caps.max_power_generators)?;
            all &= report.passed;
            details.push(serde_json::to_value(&report).expect("report serializes"));
        }
        Ok((all, serde_json::Value::Array(details)))
    });
    SuiteOutcome::collect("linearQuotients", instances)
}

/// Perfect-tree regularity formula against the homology oracle, exhaustively
/// over perfect trees of height at most 3 with branching at most 3, at every
/// admissible t; includes the uniform-branching corollary values and one
/// whole-class cross-check of the formula against the recursion, which has no
/// size limit.
fn run_perfect_formula(cfg: &SuiteConfig) -> SuiteOutcome {
    #[allow(clippy::type_complexity)]
    let mut items: Vec<(String, (RootedTree, u32, Option<i64>))> = Vec::new();
    for h in 1..=3u32 {
        for (idx, tree) in enumerate_perfect_trees(h, 3).into_iter().enumerate() {
            let lo = (h + 2) / 2;
            for t in lo..=h + 1 {
                items.push((format!("perfect-h{h}-{idx}-t{t}"), (tree.clone(), t, None)));
            }
        }
    }
    let recursion_sweep = InstanceOutcome::from_result(
        "formula-vs-recursion-whole-class".to_string(),
        (|| {
            let calc = RegCalculator::new();
            let mut checked = 0u64;
            let mut mismatches = Vec::new();
            for h in 1..=3u32 {
                for tree in enumerate_perfect_trees(h, 3) {
                    for t in (h + 2) / 2..=h + 1 {
                        let formula = rooted::reg_formula_perfect(&tree, t)?;
                        let recursion = calc.tree_regularity(&tree, t)?;
                        checked += 1;
                        if formula != recursion {
                            mismatches.push(serde_json::json!({
                                "tree": tree.to_json(),
                                "t": t,
                                "formula": formula,
                                "recursion": recursion,
                            }));
                        }
                    }
                }
            }
            Ok((
                mismatches.is_empty(),
                serde_json::json!({ "checked": checked, "mismatches": mismatches }),
            ))
        })(),
    );
    // Uniform branching: closed forms (k^h - 1)/(k - 1) at t = h + 1 and
    // (k^h - k)/(k - 1) at t = h.
    for (k, h) in [(2u32, 2u32), (2, 3), (3, 2)] {
        let tree = perfect_knary_tree(k as usize, h);
        let top = (k.pow(h) as i64 - 1) / (k as i64 - 1);
        let below = (k.pow(h) as i64 - k as i64) / (k as i64 - 1);
        items.push((format!("knary-k{k}-h{h}-t{}", h + 1), (tree.clone(), h + 1, Some(top))));
        items.push((format!("knary-k{k}-h{h}-t{h}"), (tree, h, Some(below))));
    }
    let oracle = OracleConfig { max_scan_work: 3_000_000, ..cfg.oracle() };
    let cache = StrandCache::new();
    let instances = run_instances(cfg.jobs, items, |(tree, t, expected)| {
        let formula = rooted::reg_formula_perfect(tree, *t)?;
        if let Some(expected) = expected {
            if formula != *expected {
                return Ok((
                    false,
                    serde_json::json!({ "formula": formula, "closed_form": expected }),
                ));
            }
        }
        let n = tree.vertex_count();
        let h = tree.height();
        // Size policy. At t = h + 1 the oracle reduces structurally at any
        // size; below that it scans lattice strands, and the feasible zone on
        // this hardware ends near the limits below. Larger instances are
        // reported as resource-skipped rather than burning the work budget
        // one by one; the work budget still guards the attempts.
        let feasible =
            *t == h + 1 || n <= 14 || (*t == 2 && n <= 20) || (*t == 3 && n <= 16);
        if !feasible {
            return Err(Error::ResourceCap(format!(
                "size policy: {n} vertices at t = {t} is beyond the strand-scan budget"
            )));
        }
        let ideal = tree.t_path_ideal(*t);
        let observed = quotient_regularity_cached(&ideal, &oracle, &cache)?;
        Ok((
            formula == observed,
            serde_json::json!({ "formula": formula, "oracle": observed, "vertices": n }),
        ))
    });
    let mut instances = instances;
    instances.push(recursion_sweep);
    SuiteOutcome::collect("perfectFormula", instances)
}

fn quotient_regularity_cached(
    ideal: &MonomialIdeal,
    oracle: &OracleConfig,
    cache: &StrandCache,
) -> Result<i64> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let table = koszul::graded_betti_cached(ideal, oracle, Some(cache))?;
    table
        .regularity()
        .map(|r| r - 1)
        .ok_or_else(|| Error::InvariantViolation("nonzero ideal with empty table".into()))
}

/// Broom regularity formula against the oracle, exhaustively over brooms of
/// height at most 5 with at most 3 bristles per level, for every t.
fn run_broom_formula(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut items: Vec<(String, (RootedTree, u32))> = Vec::new();
    for (idx, broom) in enumerate_brooms(5, 3).into_iter().enumerate() {
        let h = broom.height();
        for t in 2..=h + 1 {
            items.push((format!("broom-{idx}-h{h}-t{t}"), (broom.clone(), t)));
        }
    }
    let oracle = cfg.oracle();
    let cache = StrandCache::new();
    let calc = RegCalculator::new();
    let instances = run_instances(cfg.jobs, items, |(broom, t)| {
        let formula = rooted::reg_broom(broom, *t)?;
        let observed = quotient_regularity_cached(&broom.t_path_ideal(*t), &oracle, &cache)?;
        let pass = formula == observed;
        let detail = if pass {
            serde_json::json!({ "formula": formula, "oracle": observed, "vertices": broom.vertex_count() })
        } else {
            // A disagreement is a counterexample candidate; cross-check the
            // oracle against the independent recursion so an artifact bug
            // cannot masquerade as one.
            let recursion = calc.tree_regularity(broom, *t)?;
            serde_json::json!({
                "formula": formula,
                "oracle": observed,
                "recursion": recursion,
                "counterexample": recursion == observed,
                "vertices": broom.vertex_count(),
                "tree": broom.to_json(),
            })
        };
        Ok((pass, detail))
    });
    SuiteOutcome::collect("broomFormula", instances)
}

/// Exact recursion against the oracle on every rooted tree with at most 10
/// vertices, for t in {2, 3, 4}.
fn run_recursion_oracle(cfg: &SuiteConfig) -> SuiteOutcome {
    let mut items: Vec<(String, (RootedTree, u32))> = Vec::new();
    for (n, trees) in enumerate_rooted_trees(10).into_iter().enumerate() {
        for (idx, tree) in trees.into_iter().enumerate() {
            for t in 2..=4u32 {
                items.push((format!("tree-n{n}-{idx}-t{t}"), (tree.clone(), t)));
            }
        }
    }
    let oracle = cfg.oracle();
    let cache = StrandCache::new();
    let calc = RegCalculator::new();
    let instances = run_instances(cfg.jobs, items, |(tree, t)| {
        let recursion = calc.tree_regularity(tree, *t)?;
        let observed = quotient_regularity_cached(&tree.t_path_ideal(*t), &oracle, &cache)?;
        Ok((
            recursion == observed,
            serde_json::json!({ "recursion": recursion, "oracle": observed }),
        ))
    });
    SuiteOutcome::collect("recursionOracle", instances)
}

/// Closed power formulas against the oracle (brooms and perfect trees), and
/// agreement of the clean-broom linearity classification with the oracle on
/// seeded trees.
fn run_power_formulas(cfg: &SuiteConfig) -> SuiteOutcome {
    enum Item {
        BroomPower(RootedTree, u32, u32),
        PerfectPower(RootedTree, u32),
        Linearity(RootedTree, u32),
    }
    let mut items: Vec<(String, Item)> = Vec::new();
    for (idx, broom) in enumerate_brooms(3, 2).into_iter().enumerate() {
        let h = broom.height();
        for t in 2..=h + 1 {
            items.push((format!("broom-power-{idx}-t{t}-s2"), Item::BroomPower(broom.clone(), t, 2)));
        }
    }
    for h in 1..=2u32 {
        for (idx, tree) in enumerate_perfect_trees(h, 2).into_iter().enumerate() {
            for s in 2..=3u32 {
                items.push((format!("perfect-power-h{h}-{idx}-s{s}"), Item::PerfectPower(tree.clone(), s)));
            }
        }
    }
    let linearity_count = cfg.count.unwrap_or(50);
    let mut rng = Rng::new(cfg.seed);
    let mut made = 0;
    while made < linearity_count {
        let tree = random_rooted_tree(&mut rng, 9);
        let h = tree.height();
        if h < 1 {
            continue;
        }
        let t = rng.range(2, (h + 1).min(3) as usize) as u32;
        items.push((format!("path-linearity-{made}-t{t}"), Item::Linearity(tree, t)));
        made += 1;
    }

    let oracle = cfg.oracle();
    let caps = cfg.caps;
    let cache = StrandCache::new();
    let instances = run_instances(cfg.jobs, items, |item| match item {
        Item::BroomPower(broom, t, s) => {
            // The power statement proper: regularity grows by t per power
            // step from the observed base value. The closed-form composition
            // is recorded alongside; its base formula has counterexamples,
            // which the broomFormula suite reports.
            let base = quotient_regularity_cached(&broom.t_path_ideal(*t), &oracle, &cache)?;
            let relative = *t as i64 * (*s as i64 - 1) + base;
            let composed = powers::power_reg_broom(broom, *t, *s)?;
            let power = broom.t_path_ideal(*t).power(*s, caps.max_power_generators)?;
            let observed = quotient_regularity_cached(&power, &oracle, &cache)?;
            Ok((
                relative == observed,
                serde_json::json!({
                    "base": base,
                    "relative": relative,
                    "closed_form": composed,
                    "closed_form_matches": composed == observed,
                    "oracle": observed,
                }),
            ))
        }
        Item::PerfectPower(tree, s) => {
            let formula = powers::power_reg_perfect_top(tree, *s)?;
            let t = tree.height() + 1;
            let base = quotient_regularity_cached(&tree.t_path_ideal(t), &oracle, &cache)?;
            let relative = t as i64 * (*s as i64 - 1) + base;
            let power = tree.t_path_ideal(t).power(*s, caps.max_power_generators)?;
            let observed = quotient_regularity_cached(&power, &oracle, &cache)?;
            Ok((
                formula == observed && relative == observed,
                serde_json::json!({ "formula": formula, "relative": relative, "oracle": observed }),
            ))
        }
        Item::Linearity(tree, t) => {
            let classified = powers::classify_path_power_linearity(tree, *t)?;
            let ideal = tree.t_path_ideal(*t);
            let base = linear_resolution_cached(&ideal, &oracle, &cache)?;
            let square = ideal.power(2, caps.max_power_generators)?;
            let squared = linear_resolution_cached(&square, &oracle, &cache)?;
            let pass = classified == base && classified == squared;
            let detail = if pass {
                serde_json::json!({ "classified": classified, "base": base, "square": squared })
            } else {
                // Disagreement witness with the independent regularity routes,
                // so a counterexample can be told apart from a bug.
                let calc = RegCalculator::new();
                let reg_rec = calc.tree_regularity(tree, *t)?;
                let reg_orc = quotient_regularity_cached(&ideal, &oracle, &cache)?;
                serde_json::json!({
                    "classified": classified,
                    "base": base,
                    "square": squared,
                    "quotient_regularity_oracle": reg_orc,
                    "quotient_regularity_recursion": reg_rec,
                    "t": t,
                    "tree": tree.to_json(),
                })
            };
            Ok((pass, detail))
        }
    });
    SuiteOutcome::collect("powerFormulas", instances)
}

fn linear_resolution_cached(
    ideal: &MonomialIdeal,
    oracle: &OracleConfig,
    cache: &StrandCache,
) -> Result<bool> {
    let d = match ideal.equigenerated_degree()? {
        Some(d) => d,
        None => return Ok(false),
    };
    Ok(koszul::graded_betti_cached(ideal, oracle, Some(cache))?.is_linear(d))
}

/// The two regularity upper bounds dominate the oracle on seeded rooted trees
/// inside their precondition windows.
fn run_bounds(cfg: &SuiteConfig) -> SuiteOutcome {
    let count = cfg.count.unwrap_or(100);
    let mut rng = Rng::new(cfg.seed);
    let mut items: Vec<(String, (RootedTree, u32, u32))> = Vec::with_capacity(count);
    for k in 0..count {
        let tree = random_rooted_tree(&mut rng, 11);
        let h = tree.height();
        let lo = (h + 2) / 2;
        let t_window = rng.range(lo as usize, (h + 1) as usize) as u32;
        let t_any = rng.range(2.min((h + 1) as usize), (h + 1) as usize) as u32;
        items.push((format!("tree-{k}"), (tree, t_window, t_any)));
    }
    let oracle = cfg.oracle();
    let cache = StrandCache::new();
    let calc = RegCalculator::new();
    let instances = run_instances(cfg.jobs, items, |(tree, t_window, t_any)| {
        let bound = rooted::reg_upper_bound_general(tree, *t_window)?;
        let exact_window = quotient_regularity_cached(&tree.t_path_ideal(*t_window), &oracle, &cache)?;
        let alpha = rooted::alpha_bound(&calc, tree, *t_any)?;
        let exact_any = quotient_regularity_cached(&tree.t_path_ideal(*t_any), &oracle, &cache)?;
        let ok = bound >= exact_window && alpha >= exact_any;
        Ok((
            ok,
            serde_json::json!({
                "general_bound": bound,
                "oracle_at_window_t": exact_window,
                "alpha_bound": alpha,
                "oracle_at_any_t": exact_any,
            }),
        ))
    });
    SuiteOutcome::collect("bounds", instances)
}

/// Slack tables for the power-regularity conjecture over seeded simplicial
/// trees. Negative slack is reported as a finding, never as a failure.
pub fn run_conjecture_scan(cfg: &SuiteConfig) -> SuiteOutcome {
    let count = cfg.count.unwrap_or(300);
    let s_max = cfg.s_max.max(3);
    let mut rng = Rng::new(cfg.seed);
    let mut items = Vec::with_capacity(count);
    for k in 0..count {
        let mode = if k % 3 == 0 { GrowthMode::PureCodimOneTree } else { GrowthMode::Tree };
        let complex = random_simplicial_forest(&mut rng, cfg.max_facets, 3, mode);
        items.push((format!("tree-{k}"), complex));
    }
    let oracle = cfg.oracle();
    let caps = cfg.caps;
    let instances = run_instances(cfg.jobs, items, |complex| {
        let table = powers::conjecture_slack_table(complex, s_max, &oracle, caps.max_power_generators)?;
        let detail = serde_json::to_value(&table).expect("table serializes");
        // Negative slack is a finding; the instance still passes.
        Ok((true, detail))
    });
    SuiteOutcome::collect("conjectureD", instances)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(Suite::from_name(suite.name()), Some(suite));
        }
        assert_eq!(Suite::from_name("nonsense"), None);
    }

    #[test]
    fn fixtures_suite_passes() {
        let cfg = SuiteConfig { jobs: 2, ..Default::default() };
        let outcome = run_suite(Suite::Fixtures, &cfg);
        assert!(outcome.passed, "{}", outcome.summary);
    }

    #[test]
    fn small_theorem_a_corpus_passes() {
        let cfg = SuiteConfig { count: Some(12), jobs: 2, ..Default::default() };
        let outcome = run_suite(Suite::TheoremA, &cfg);
        assert!(outcome.passed, "{}", outcome.summary);
    }

    #[test]
    fn parallel_and_serial_runs_agree() {
        let serial = run_suite(
            Suite::LemmaColon,
            &SuiteConfig { count: Some(8), jobs: 1, ..Default::default() },
        );
        let parallel = run_suite(
            Suite::LemmaColon,
            &SuiteConfig { count: Some(8), jobs: 4, ..Default::default() },
        );
        assert_eq!(
            serde_json::to_string(&serial.instances).unwrap(),
            serde_json::to_string(&parallel.instances).unwrap()
        );
    }
}
