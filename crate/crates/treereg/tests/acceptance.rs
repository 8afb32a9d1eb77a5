//! Acceptance suite: one test per criterion, each printing a single verdict
//! line (run with `-- --nocapture` to see them all).
//!
//! Three criteria are expected to fail, and the failures are the point:
//!
//! * criterion 5 demands the homology oracle on every perfect tree of height
//!   up to 3 with branching up to 3 — the class reaches 40-vertex trees whose
//!   lattice scans are astronomically large, so the out-of-reach instances
//!   are reported as resource-stopped (the in-reach 2000+ all agree, and the
//!   recursion corroborates the formula on the whole class);
//! * criteria 7 and 11 encode closed-form statements that the toolkit
//!   refutes: brooms with low-hanging bristles are counterexamples, verified
//!   by two independent computations per instance.

use std::sync::OnceLock;

use treereg::suites::{self, Status, Suite, SuiteConfig, SuiteOutcome};

fn config() -> SuiteConfig {
    SuiteConfig {
        seed: 1,
        jobs: std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1),
        ..Default::default()
    }
}

fn fixtures() -> &'static SuiteOutcome {
    static ONCE: OnceLock<SuiteOutcome> = OnceLock::new();
    ONCE.get_or_init(|| suites::run_suite(Suite::Fixtures, &config()))
}

fn perfect_formula() -> &'static SuiteOutcome {
    static ONCE: OnceLock<SuiteOutcome> = OnceLock::new();
    ONCE.get_or_init(|| suites::run_suite(Suite::PerfectFormula, &config()))
}

fn power_formulas() -> &'static SuiteOutcome {
    static ONCE: OnceLock<SuiteOutcome> = OnceLock::new();
    ONCE.get_or_init(|| suites::run_suite(Suite::PowerFormulas, &config()))
}

fn verdict(number: u32, name: &str, pass: bool, detail: &str) -> bool {
    println!(
        "ACCEPTANCE {number:02} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

/// (pass, fail, resource) among instances whose id starts with `prefix`.
fn tally(outcome: &SuiteOutcome, prefix: &str) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for i in &outcome.instances {
        if i.id.starts_with(prefix) {
            match i.status {
                Status::Pass => counts.0 += 1,
                Status::Fail => counts.1 += 1,
                Status::Resource => counts.2 += 1,
            }
        }
    }
    counts
}

#[test]
fn criterion_01_fixture_ideals() {
    let outcome = fixtures();
    let (pass_t, fail_t, res_t) = tally(outcome, "terai-");
    let (pass_s, fail_s, res_s) = tally(outcome, "sturmfels-");
    let ok = fail_t + res_t + fail_s + res_s == 0 && pass_t == 4 && pass_s == 3;
    assert!(verdict(
        1,
        "fixture ideals: linearity and its loss under squaring",
        ok,
        &format!("terai {pass_t}/4, sturmfels {pass_s}/3"),
    ));
}

#[test]
fn criterion_02_six_way_equivalence() {
    let outcome = suites::run_suite(Suite::TheoremA, &config());
    assert!(outcome.total >= 200, "corpus too small: {}", outcome.total);
    assert!(verdict(
        2,
        "six-way equivalence on seeded forests",
        outcome.passed,
        &outcome.summary,
    ));
}

#[test]
fn criterion_03_linear_quotients_of_powers() {
    let outcome = suites::run_suite(Suite::LinearQuotients, &config());
    assert!(outcome.total >= 50, "corpus too small: {}", outcome.total);
    assert!(verdict(
        3,
        "canonical power order has linear quotients with verified witnesses",
        outcome.passed,
        &outcome.summary,
    ));
}

#[test]
fn criterion_04_colon_identities() {
    let outcome = suites::run_suite(Suite::LemmaColon, &config());
    assert!(outcome.total >= 100, "corpus too small: {}", outcome.total);
    assert!(verdict(
        4,
        "colon identities along good-leaf orders",
        outcome.passed,
        &outcome.summary,
    ));
}

#[test]
fn criterion_05_perfect_tree_formula_exhaustive() {
    let outcome = perfect_formula();
    let (_, fails, resource) = tally(outcome, "perfect-");
    let sweep = outcome
        .instances
        .iter()
        .find(|i| i.id == "formula-vs-recursion-whole-class")
        .expect("sweep instance present");
    println!(
        "  note: formula vs homology oracle has no disagreement on any reachable instance \
         ({} resource-stopped; whole-class recursion cross-check: {:?})",
        resource, sweep.status
    );
    assert!(
        verdict(
            5,
            "perfect-tree formula vs homology oracle, exhaustive class",
            outcome.passed,
            &outcome.summary,
        ),
        "the exhaustive class includes trees up to 40 vertices whose lattice scans \
         exceed any desk-scale budget; {fails} disagreements, {resource} resource-stopped"
    );
}

#[test]
fn criterion_06_uniform_branching_corollary() {
    let outcome = perfect_formula();
    let (pass, fail, resource) = tally(outcome, "knary-");
    let ok = fail == 0 && resource == 0 && pass == 6;
    assert!(verdict(
        6,
        "uniform-branching closed forms at t = h and t = h + 1",
        ok,
        &format!("{pass}/6 instances verified against formula and oracle"),
    ));
}

#[test]
fn criterion_07_broom_formula_exhaustive() {
    let outcome = suites::run_suite(Suite::BroomFormula, &config());
    let counterexamples = outcome
        .instances
        .iter()
        .filter(|i| {
            i.status == Status::Fail
                && i.detail.get("counterexample").and_then(|v| v.as_bool()) == Some(true)
        })
        .count();
    println!(
        "  note: every disagreement is cross-checked by the independent recursion; \
         {counterexamples} of {} failures are confirmed counterexamples to the closed form",
        outcome.failures
    );
    assert!(
        verdict(
            7,
            "broom closed form vs oracle, exhaustive class",
            outcome.passed,
            &outcome.summary,
        ),
        "the closed form is refuted on brooms with low-level bristles; smallest case: \
         height 3, one bristle at level 1, t = 2 (formula 1, true value 2)"
    );
}

#[test]
fn criterion_08_upper_bounds_dominate() {
    let outcome = suites::run_suite(Suite::Bounds, &config());
    assert!(outcome.total >= 100, "corpus too small: {}", outcome.total);
    assert!(verdict(
        8,
        "general and leaf-decomposition bounds dominate the oracle",
        outcome.passed,
        &outcome.summary,
    ));
}

#[test]
fn criterion_09_recursion_matches_oracle() {
    let outcome = suites::run_suite(Suite::RecursionOracle, &config());
    assert!(
        outcome.total >= 3 * 1205,
        "expected every rooted tree up to 10 vertices at t in 2..=4"
    );
    assert!(verdict(
        9,
        "leaf-decomposition recursion vs oracle, exhaustive to 10 vertices",
        outcome.passed,
        &outcome.summary,
    ));
}

#[test]
fn criterion_10_power_regularity_formulas() {
    let outcome = power_formulas();
    let (pass_b, fail_b, res_b) = tally(outcome, "broom-power-");
    let (pass_p, fail_p, res_p) = tally(outcome, "perfect-power-");
    let ok = fail_b + res_b + fail_p + res_p == 0 && pass_b >= 10 && pass_p >= 10;
    assert!(verdict(
        10,
        "power regularity grows by t per step on brooms and perfect trees",
        ok,
        &format!("brooms {pass_b} ok, perfect trees {pass_p} ok"),
    ));
}

#[test]
fn criterion_11_path_power_linearity_classification() {
    let outcome = power_formulas();
    let (pass, fail, resource) = tally(outcome, "path-linearity-");
    assert!(pass + fail + resource >= 50, "corpus too small");
    println!(
        "  note: disagreements carry both independent regularity routes as witnesses; \
         the clean-broom-height test misses low-bristle brooms whose resolution is not linear"
    );
    assert!(
        verdict(
            11,
            "clean-broom-height test vs oracle linearity of I_t and its square",
            fail == 0 && resource == 0,
            &format!("{pass} agree, {fail} disagree, {resource} stopped"),
        ),
        "the quoted classification is refuted by brooms with low-level bristles"
    );
}

#[test]
fn criterion_12_conjecture_scan() {
    let mut cfg = config();
    cfg.s_max = 3;
    let outcome = suites::run_conjecture_scan(&cfg);
    assert!(outcome.total >= 300, "corpus too small: {}", outcome.total);
    // Negative slack is a finding, never a failure; report it loudly.
    for i in &outcome.instances {
        if i.detail.get("finding").and_then(|v| v.as_bool()) == Some(true) {
            println!(
                "  FINDING: negative slack (validated counterexample to the conjectured bound): {}",
                serde_json::to_string(&i.detail).unwrap()
            );
        }
    }
    let report_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../target/conjecture-scan-report.json");
    std::fs::write(
        report_path,
        serde_json::to_string_pretty(&outcome.to_json()).unwrap(),
    )
    .expect("report artifact written");
    println!("  report artifact: {report_path}");
    assert!(verdict(
        12,
        "conjecture slack scan over seeded simplicial trees",
        outcome.passed,
        &format!("{}; {} findings", outcome.summary, outcome.findings),
    ));
}

#[test]
fn criterion_13_oracle_self_consistency() {
    let outcome = fixtures();
    let (pass, fail, resource) = tally(outcome, "characteristic-agreement-");
    let ok = fail == 0 && resource == 0 && pass >= 16;
    assert!(verdict(
        13,
        "generator rows, Euler strand checks, and characteristic agreement",
        ok,
        &format!(
            "{pass} corpus ideals agree between QQ and F_32003; \
             beta_0 and Euler checks assert inside every oracle call"
        ),
    ));
}
