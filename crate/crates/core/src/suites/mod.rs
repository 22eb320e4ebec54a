//! Bounded-grid identity suites. Each suite expands its parameters into an
//! ordered list of cases; cases run in parallel but are reported in order.

pub mod lemmas;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashSet;
use serde_json::{json, Map, Value};

use crate::algebra::{MultiPoly, VarTable};
use crate::characters::{character, character_routes, GroupKind};
use crate::qfunctions::{q_function, q_routes, tokuyama_table, verify_tokuyama, QKind};
use crate::registry::{Named, Registry};
use crate::tableau::{
    enumerate_partitions, enumerate_tableaux, tableau_to_paths, Partition, StrictPartition, TableauKind,
};
use crate::{Error, Result};

/// Grid bounds and optional filters shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub n_max: usize,
    pub lambda_max: usize,
    /// Bound on `|μ|` for the Tokuyama suite.
    pub mu_max: usize,
    pub kind: Option<String>,
    pub n: Option<usize>,
    pub lambda: Option<Vec<usize>>,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n_max: 2,
            lambda_max: 3,
            mu_max: 2,
            kind: None,
            n: None,
            lambda: None,
            seed: 0,
        }
    }
}

impl SuiteParams {
    fn ns(&self) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (1..=self.n_max).collect(),
        }
    }

    fn shapes(&self, n: usize, strict: bool) -> Result<Vec<Partition>> {
        match &self.lambda {
            Some(parts) if parts.len() > n => Ok(vec![]),
            Some(parts) => {
                let p = Partition::new(parts, n)?;
                if strict {
                    StrictPartition::try_from(p.clone())?;
                }
                Ok(vec![p])
            }
            None => Ok(enumerate_partitions(self.lambda_max, n, strict)),
        }
    }

    fn kinds<K>(&self, all: &[K]) -> Result<Vec<K>>
    where
        K: Copy + std::str::FromStr,
        Error: From<K::Err>,
    {
        match &self.kind {
            Some(k) => Ok(vec![k.parse()?]),
            None => Ok(all.to_vec()),
        }
    }
}

/// What a case found: whether the sides agree, and the size of each side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub equal: bool,
    pub terms: Vec<usize>,
}

impl Outcome {
    pub fn compare(values: &[MultiPoly]) -> Outcome {
        Outcome {
            equal: values.windows(2).all(|w| w[0] == w[1]),
            terms: values.iter().map(MultiPoly::len).collect(),
        }
    }
}

type Check = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Case {
    pub inputs: Value,
    pub routes: Vec<String>,
    check: Check,
}

impl Case {
    pub fn new(inputs: Value, routes: &[&str], check: impl Fn() -> Result<Outcome> + Send + Sync + 'static) -> Self {
        Case {
            inputs,
            routes: routes.iter().map(|s| s.to_string()).collect(),
            check: Box::new(check),
        }
    }

    fn sides(
        inputs: Value,
        routes: &[&str],
        f: impl Fn() -> Result<(MultiPoly, MultiPoly)> + Send + Sync + 'static,
    ) -> Self {
        Case::new(inputs, routes, move || {
            let (l, r) = f()?;
            Ok(Outcome::compare(&[l, r]))
        })
    }

    pub fn run(&self, index: usize) -> CaseResult {
        let start = Instant::now();
        let got = (self.check)();
        let wall_us = start.elapsed().as_micros() as u64;
        let (outcome, error) = match got {
            Ok(o) => (o, None),
            Err(e) => (
                Outcome {
                    equal: false,
                    terms: vec![],
                },
                Some(e.to_string()),
            ),
        };
        CaseResult {
            index,
            inputs: self.inputs.clone(),
            routes: self.routes.clone(),
            equal: outcome.equal,
            terms: outcome.terms,
            wall_us,
            error,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub index: usize,
    pub inputs: Value,
    pub routes: Vec<String>,
    pub equal: bool,
    pub terms: Vec<usize>,
    pub wall_us: u64,
    pub error: Option<String>,
}

impl CaseResult {
    pub fn to_json(&self, timings: bool) -> Value {
        let mut m = Map::new();
        m.insert("index".into(), json!(self.index));
        m.insert("inputs".into(), self.inputs.clone());
        m.insert("routes".into(), json!(self.routes));
        m.insert("equal".into(), json!(self.equal));
        m.insert("terms".into(), json!(self.terms));
        if timings {
            m.insert("wall_us".into(), json!(self.wall_us));
        }
        if let Some(e) = &self.error {
            m.insert("error".into(), json!(e));
        }
        Value::Object(m)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.equal).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn first_failure(&self) -> Option<&CaseResult> {
        self.cases.iter().find(|c| !c.equal)
    }

    pub fn total_wall_us(&self) -> u64 {
        self.cases.iter().map(|c| c.wall_us).sum()
    }

    /// Wall times are left out unless `timings` is set, so that the default
    /// report is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(|c| c.to_json(timings)).collect::<Vec<_>>(),
            "summary": {"passed": self.passed(), "failed": self.failed()},
        })
    }
}

/// A named family of identity checks over a bounded grid.
pub trait Suite: Named + Send + Sync {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>>;
}

fn partition_inputs(kind: &str, n: usize, key: &str, parts: &[usize]) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(kind));
    m.insert("n".into(), json!(n));
    m.insert(key.into(), json!(parts));
    Value::Object(m)
}

fn character_cases(p: &SuiteParams, routes: Vec<&'static str>) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for kind in p.kinds(&GroupKind::ALL)? {
        for n in p.ns() {
            for lambda in p.shapes(n, false)? {
                let vt = VarTable::for_partition(n, lambda.largest())?;
                let inputs = partition_inputs(kind.name(), n, "lambda", lambda.parts());
                let rs = routes.clone();
                out.push(Case::new(inputs, &routes, move || {
                    let values = rs
                        .iter()
                        .map(|r| character(kind, &lambda, &vt, r))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Outcome::compare(&values))
                }));
            }
        }
    }
    Ok(out)
}

pub struct RoutesSuite;

impl Named for RoutesSuite {
    fn name(&self) -> &'static str {
        "routes"
    }
    fn summary(&self) -> &'static str {
        "every character route agrees"
    }
}

impl Suite for RoutesSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        character_cases(p, character_routes().names())
    }
}

pub struct JtVsDefSuite;

impl Named for JtVsDefSuite {
    fn name(&self) -> &'static str {
        "jt-vs-def"
    }
    fn summary(&self) -> &'static str {
        "flagged Jacobi-Trudi against the alternant ratio"
    }
}

impl Suite for JtVsDefSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        character_cases(p, vec!["jt", "def"])
    }
}

pub struct QRoutesSuite;

impl Named for QRoutesSuite {
    fn name(&self) -> &'static str {
        "q-routes"
    }
    fn summary(&self) -> &'static str {
        "Q-functions by tableaux against the determinantal sum"
    }
}

impl Suite for QRoutesSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let routes = q_routes().names();
        let mut out = Vec::new();
        for kind in p.kinds(&QKind::ALL)? {
            for n in p.ns() {
                for lambda in p.shapes(n, true)? {
                    let lambda = StrictPartition::try_from(lambda)?;
                    let vt = VarTable::for_partition(n, lambda.largest())?;
                    let inputs = partition_inputs(kind.name(), n, "lambda", lambda.parts());
                    let rs = routes.clone();
                    out.push(Case::new(inputs, &routes, move || {
                        let values = rs
                            .iter()
                            .map(|r| q_function(kind, &lambda, &vt, r))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Outcome::compare(&values))
                    }));
                }
            }
        }
        Ok(out)
    }
}

pub struct TokuyamaSuite;

impl Named for TokuyamaSuite {
    fn name(&self) -> &'static str {
        "tokuyama"
    }
    fn summary(&self) -> &'static str {
        "Q at mu+delta against the staircase product times the character at mu"
    }
}

impl Suite for TokuyamaSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let mut out = Vec::new();
        for kind in p.kinds(&QKind::ALL)? {
            for n in p.ns() {
                let mus: Vec<Partition> = match &p.lambda {
                    Some(_) => p.shapes(n, false)?,
                    None => enumerate_partitions(p.mu_max, n, false)
                        .into_iter()
                        .filter(|m| m.size() <= p.mu_max)
                        .collect(),
                };
                for mu in mus {
                    let inputs = partition_inputs(kind.name(), n, "mu", mu.parts());
                    out.push(Case::new(inputs, &["tab", "product"], move || {
                        let r = verify_tokuyama(kind, &mu, &tokuyama_table(&mu)?)?;
                        Ok(Outcome {
                            equal: r.equal,
                            terms: vec![r.lhs.len(), r.rhs.len()],
                        })
                    }));
                }
            }
        }
        Ok(out)
    }
}

/// Largest `m` used by the difference-relation suites.
pub const DIFF_M_MAX: i64 = 4;
/// Largest `m` used for the `q̃` recursions, reductions and the bridge.
pub const QTILDE_M_MAX: i64 = 3;
/// Number of random `(m, r, s)` draws for each `q̃` recursion.
pub const QTILDE_DRAWS: usize = 24;

pub struct HDiffSuite;

impl Named for HDiffSuite {
    fn name(&self) -> &'static str {
        "h-diff"
    }
    fn summary(&self) -> &'static str {
        "difference relations between h over adjacent index ranges"
    }
}

impl Suite for HDiffSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let mut out = Vec::new();
        for kind in p.kinds(&GroupKind::ALL)? {
            for n in p.ns() {
                let vt = VarTable::new(n, DIFF_M_MAX as usize + n)?;
                for j in 1..=n {
                    for i in 1..j {
                        for m in 0..=DIFF_M_MAX {
                            let inputs = json!({"kind": kind.name(), "n": n, "i": i, "j": j, "m": m});
                            out.push(Case::sides(inputs, &["difference", "product"], move || {
                                lemmas::h_difference(kind, m, i, j, &vt)
                            }));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

pub struct FDiffSuite;

impl Named for FDiffSuite {
    fn name(&self) -> &'static str {
        "f-diff"
    }
    fn summary(&self) -> &'static str {
        "f difference relations and reductions, q-tilde recursions, symplectic bridge"
    }
}

fn variables(prefix: fn(usize) -> MultiPoly, count: usize) -> Vec<MultiPoly> {
    (1..=count).map(prefix).collect()
}

impl Suite for FDiffSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let mut out = Vec::new();
        let kinds = p.kinds(&QKind::ALL)?;
        for &kind in &kinds {
            for n in p.ns() {
                let vt = VarTable::new(n, DIFF_M_MAX as usize + n)?;
                for q in 1..=n {
                    for pp in 1..q {
                        for m in 0..=DIFF_M_MAX {
                            let inputs =
                                json!({"check": "difference", "kind": kind.name(), "n": n, "p": pp, "q": q, "m": m});
                            out.push(Case::sides(inputs, &["difference", "product"], move || {
                                lemmas::f_difference(kind, m, pp, q, &vt)
                            }));
                        }
                    }
                }
                for d in 1..=n {
                    for m in 0..=QTILDE_M_MAX {
                        let inputs = json!({"check": "p=q", "kind": kind.name(), "n": n, "d": d, "m": m});
                        out.push(Case::sides(inputs, &["f", "q"], move || {
                            lemmas::f_at_diagonal(kind, m, d, &vt)
                        }));
                        let inputs = json!({"check": "q=n", "kind": kind.name(), "n": n, "d": d, "m": m});
                        out.push(Case::sides(inputs, &["f", "h"], move || {
                            lemmas::f_at_top(kind, m, d, &vt)
                        }));
                    }
                }
                if kind == QKind::Sp {
                    for i in 1..=n {
                        for m in 0..=QTILDE_M_MAX {
                            let inputs = json!({"check": "bridge", "kind": kind.name(), "n": n, "i": i, "m": m});
                            out.push(Case::sides(inputs, &["qtilde", "q"], move || {
                                lemmas::bridge(kind, m, i, &vt)
                            }));
                        }
                    }
                }
            }
        }
        let mut rng = StdRng::seed_from_u64(p.seed);
        let vt = VarTable::new(3, 12)?;
        for draw in 0..QTILDE_DRAWS {
            let m = rng.gen_range(1..=QTILDE_M_MAX);
            let r = rng.gen_range(1..=3usize);
            let s = rng.gen_range(if draw % 2 == 0 { 0 } else { 1 }..=3usize);
            let (u, v) = (variables(MultiPoly::x, r), variables(MultiPoly::y, s));
            let inputs = json!({"check": "qtilde-u", "seed": p.seed, "m": m, "r": r, "s": s});
            let (uu, vv) = (u.clone(), v.clone());
            out.push(Case::sides(inputs, &["qtilde", "recursion"], move || {
                lemmas::qtilde_drop_u(m, &uu, &vv, &vt)
            }));
            if s > 0 {
                let inputs = json!({"check": "qtilde-v", "seed": p.seed, "m": m, "r": r, "s": s});
                out.push(Case::sides(inputs, &["qtilde", "recursion"], move || {
                    lemmas::qtilde_drop_v(m, &u, &v, &vt)
                }));
            }
        }
        Ok(out)
    }
}

/// Checks every tableau of one shape against its lattice-path image.
pub fn lgv_outcome(kind: TableauKind, shape: &[usize], n: usize) -> Result<Outcome> {
    let vt = VarTable::for_partition(n, shape.first().copied().unwrap_or(0))?;
    let mut seen = FxHashSet::default();
    let mut count = 0usize;
    let mut ok = true;
    for t in enumerate_tableaux(kind, shape, n)? {
        count += 1;
        let paths = tableau_to_paths(&t);
        ok &= paths.is_non_intersecting();
        ok &= paths.weight() == t.weight(&vt)?;
        seen.insert(paths.geometry());
    }
    ok &= seen.len() == count;
    Ok(Outcome {
        equal: ok,
        terms: vec![count, seen.len()],
    })
}

pub struct LgvSuite;

impl Named for LgvSuite {
    fn name(&self) -> &'static str {
        "lgv"
    }
    fn summary(&self) -> &'static str {
        "tableau to lattice path map is injective, non-intersecting and weight preserving"
    }
}

impl Suite for LgvSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let mut out = Vec::new();
        for kind in p.kinds(&TableauKind::ALL)? {
            for n in p.ns() {
                for shape in p.shapes(n, kind.is_q())? {
                    let parts = shape.parts().to_vec();
                    let inputs = partition_inputs(kind.name(), n, "lambda", &parts);
                    out.push(Case::new(inputs, &["tableaux", "paths"], move || {
                        lgv_outcome(kind, &parts, n)
                    }));
                }
            }
        }
        Ok(out)
    }
}

/// Every other suite in registration order.
pub struct AllSuite;

impl Named for AllSuite {
    fn name(&self) -> &'static str {
        "all"
    }
    fn summary(&self) -> &'static str {
        "all of the above"
    }
}

impl Suite for AllSuite {
    fn cases(&self, p: &SuiteParams) -> Result<Vec<Case>> {
        let mut out = Vec::new();
        for s in base_suites().iter() {
            // A kind filter only makes sense for one family of kinds.
            let mut sp = p.clone();
            if let Some(k) = &p.kind {
                let fits = match s.name() {
                    "lgv" => k.parse::<TableauKind>().is_ok(),
                    "q-routes" | "tokuyama" | "f-diff" => k.parse::<QKind>().is_ok(),
                    _ => k.parse::<GroupKind>().is_ok(),
                };
                if !fits {
                    sp.kind = None;
                }
            }
            for mut c in s.cases(&sp)? {
                let mut m = Map::new();
                m.insert("suite".into(), json!(s.name()));
                if let Value::Object(rest) = c.inputs {
                    m.extend(rest);
                }
                c.inputs = Value::Object(m);
                out.push(c);
            }
        }
        Ok(out)
    }
}

fn base_suites() -> Registry<dyn Suite> {
    let mut r: Registry<dyn Suite> = Registry::new("suite");
    r.register(Box::new(RoutesSuite))
        .register(Box::new(JtVsDefSuite))
        .register(Box::new(QRoutesSuite))
        .register(Box::new(TokuyamaSuite))
        .register(Box::new(HDiffSuite))
        .register(Box::new(FDiffSuite))
        .register(Box::new(LgvSuite));
    r
}

pub fn suites() -> Registry<dyn Suite> {
    let mut r = base_suites();
    r.register(Box::new(AllSuite));
    r
}

/// Runs the named suite on `jobs` worker threads (0 picks the machine default).
pub fn run_suite(name: &str, params: &SuiteParams, jobs: usize) -> Result<SuiteReport> {
    let registry = suites();
    let suite = registry.get(name)?;
    let cases = suite.cases(params)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    use rayon::prelude::*;
    let results = pool.install(|| cases.par_iter().enumerate().map(|(i, c)| c.run(i)).collect());
    Ok(SuiteReport {
        suite: suite.name().to_string(),
        cases: results,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes_suite_small_grid() {
        let p = SuiteParams {
            n_max: 2,
            lambda_max: 2,
            kind: Some("sp".into()),
            ..Default::default()
        };
        let r = run_suite("routes", &p, 2).unwrap();
        assert!(r.failed() == 0 && r.passed() > 0);
        assert_eq!(r.cases[0].routes, ["def", "hdet", "jt", "tab"]);
        let again = run_suite("routes", &p, 1).unwrap();
        assert_eq!(r.to_json(false), again.to_json(false));
    }

    #[test]
    fn f_diff_is_seed_stable() {
        let p = SuiteParams {
            n_max: 1,
            seed: 7,
            ..Default::default()
        };
        let a = run_suite("f-diff", &p, 0).unwrap();
        let b = run_suite("f-diff", &p, 3).unwrap();
        assert_eq!(a.to_json(false), b.to_json(false));
        assert_eq!(a.failed(), 0, "{}", a.to_json(false));
    }

    #[test]
    fn lgv_single_shape() {
        let p = SuiteParams {
            kind: Some("glChar".into()),
            lambda: Some(vec![2, 1]),
            n: Some(2),
            ..Default::default()
        };
        let r = run_suite("lgv", &p, 1).unwrap();
        assert_eq!(r.cases.len(), 1);
        assert!(r.cases[0].equal);
        assert_eq!(r.cases[0].terms, [2, 2]);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &SuiteParams::default(), 1),
            Err(Error::UnknownName { .. })
        ));
    }
}
