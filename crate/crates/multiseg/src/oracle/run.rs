use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{universe, UniverseBounds};
use super::laws::{registry, Failure, Law, Scope};
use crate::multisegment::Multisegment;
use crate::segment::Segment;

/// Knobs for [`run_laws_with`].
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Comma-separated law ids; an entry ending in `.` selects a whole family.
    pub filter: Option<String>,
    /// Worker threads; `Some(1)` evaluates on the calling thread.
    pub jobs: Option<usize>,
    /// Report laws below their `min_fired` as dead.
    pub require_min_fired: bool,
    /// Stop at the first failing input (sequential runs only).
    pub fail_fast: bool,
    pub shrink: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { filter: None, jobs: None, require_min_fired: true, fail_fast: false, shrink: true }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Counterexample,
}

/// One law on one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law_id: String,
    pub input: String,
    pub window: Option<String>,
    pub params: String,
    pub verdict: Verdict,
    pub lhs: String,
    pub rhs: String,
    /// CLI invocation reproducing this report.
    pub replay: String,
    /// The unshrunk failing input, when shrinking changed it.
    pub shrunk_from: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LawStatus {
    Pass,
    Counterexample,
    /// No counterexample, but fewer non-vacuous instances than required.
    Dead,
}

/// Aggregate outcome of one law over a universe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawSummary {
    pub law_id: String,
    pub criterion: Option<u8>,
    pub status: LawStatus,
    /// Evaluations performed.
    pub checked: u64,
    /// Non-vacuous instances.
    pub fired: u64,
    pub min_fired: u64,
    /// Evaluations that failed.
    pub failures: u64,
    /// The first failure in enumeration order, shrunk.
    pub counterexample: Option<LawReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub bounds: Option<UniverseBounds>,
    pub universe_size: usize,
    pub windows: usize,
    pub laws: Vec<LawSummary>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.laws.iter().all(|l| l.status == LawStatus::Pass)
    }

    /// Whether every law tagged with `criterion` passed; `None` if no law is tagged.
    pub fn criterion_ok(&self, criterion: u8) -> Option<bool> {
        let mut tagged = self.laws.iter().filter(|l| l.criterion == Some(criterion)).peekable();
        tagged.peek()?;
        Some(tagged.all(|l| l.status == LawStatus::Pass))
    }

    pub fn has_counterexample(&self) -> bool {
        self.laws.iter().any(|l| l.failures > 0)
    }

    /// One record per law: its counterexample, or a passing record.
    pub fn reports(&self) -> Vec<LawReport> {
        self.laws
            .iter()
            .map(|l| {
                l.counterexample.clone().unwrap_or_else(|| LawReport {
                    law_id: l.law_id.clone(),
                    input: String::new(),
                    window: None,
                    params: format!("checked {} fired {}", l.checked, l.fired),
                    verdict: Verdict::Pass,
                    lhs: String::new(),
                    rhs: String::new(),
                    replay: format!("multiseg check --law {}", l.law_id),
                    shrunk_from: None,
                })
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(b) = &self.bounds {
            let _ = writeln!(
                out,
                "universe lo={} hi={} max_segments={} max_total_length={}: {} multisegments, {} windows",
                b.lo, b.hi, b.max_segments, b.max_total_length, self.universe_size, self.windows
            );
        } else {
            let _ = writeln!(out, "single input, {} windows", self.windows);
        }
        for l in &self.laws {
            let status = match l.status {
                LawStatus::Pass => "PASS",
                LawStatus::Counterexample => "FAIL",
                LawStatus::Dead => "DEAD",
            };
            let crit = l.criterion.map_or("-".to_string(), |c| c.to_string());
            let _ = writeln!(
                out,
                "{status} {:<24} criterion {crit} checked {} fired {} (min {}) failures {}",
                l.law_id, l.checked, l.fired, l.min_fired, l.failures
            );
            if let Some(r) = &l.counterexample {
                let _ = writeln!(out, "     input  {}", r.input);
                if let Some(w) = &r.window {
                    let _ = writeln!(out, "     window {w}");
                }
                if !r.params.is_empty() {
                    let _ = writeln!(out, "     params {}", r.params);
                }
                let _ = writeln!(out, "     lhs    {}", r.lhs);
                let _ = writeln!(out, "     rhs    {}", r.rhs);
                if let Some(orig) = &r.shrunk_from {
                    let _ = writeln!(out, "     from   {orig}");
                }
                let _ = writeln!(out, "     replay {}", r.replay);
            }
        }
        let passed = self.laws.iter().filter(|l| l.status == LawStatus::Pass).count();
        let _ = writeln!(out, "{passed}/{} laws passed", self.laws.len());
        out
    }

    /// One JSON object per law.
    pub fn to_json_lines(&self) -> String {
        self.laws.iter().map(|l| serde_json::to_string(l).expect("serializable") + "\n").collect()
    }
}

fn selected(filter: Option<&str>) -> Vec<&'static Law> {
    let wanted: Vec<&str> =
        filter.map(|f| f.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()).unwrap_or_default();
    registry()
        .iter()
        .filter(|l| wanted.is_empty() || wanted.iter().any(|w| l.id == *w || (w.ends_with('.') && l.id.starts_with(w))))
        .collect()
}

#[derive(Clone, Default)]
struct Tally {
    checked: u64,
    fired: u64,
    failures: u64,
    first: Option<(Option<Segment>, Failure)>,
}

fn eval_input(laws: &[&Law], windows: &[Segment], m: &Multisegment) -> Vec<Tally> {
    laws.iter()
        .map(|law| {
            let mut t = Tally::default();
            let mut one = |d: Option<Segment>| {
                let p = law.eval(m, d);
                t.checked += 1;
                t.fired += p.fired;
                if let Some(f) = p.failure {
                    t.failures += 1;
                    t.first.get_or_insert((d, f));
                }
            };
            match law.scope() {
                Scope::Multisegment => one(None),
                Scope::Window => windows.iter().for_each(|d| one(Some(*d))),
            }
            t
        })
        .collect()
}

/// Runs every law whose id matches `filter` over the universe and all windows.
pub fn run_laws(bounds: &UniverseBounds, filter: Option<&str>) -> RunReport {
    run_laws_with(bounds, &RunOptions { filter: filter.map(str::to_string), ..RunOptions::default() })
}

pub fn run_laws_with(bounds: &UniverseBounds, opts: &RunOptions) -> RunReport {
    let inputs = universe(bounds);
    let mut report = run_core(&inputs, &bounds.windows(), opts);
    report.bounds = Some(*bounds);
    report
}

/// Runs the selected laws on a single input, on `seg` or on every window
/// around its support.
pub fn run_on_input(m: &Multisegment, seg: Option<Segment>, opts: &RunOptions) -> RunReport {
    let windows = match seg {
        Some(d) => vec![d],
        None => {
            let lo = m.min_start().unwrap_or(0) - 1;
            let hi = m.max_end().unwrap_or(0) + 1;
            (lo..=hi).flat_map(|a| (a..=hi).map(move |b| Segment::raw(a, b))).collect()
        }
    };
    let opts = RunOptions { require_min_fired: false, ..opts.clone() };
    run_core(std::slice::from_ref(m), &windows, &opts)
}

fn run_core(inputs: &[Multisegment], windows: &[Segment], opts: &RunOptions) -> RunReport {
    let laws = selected(opts.filter.as_deref());
    let eval = |m: &Multisegment| eval_input(&laws, windows, m);
    let per_input: Vec<(usize, Vec<Tally>)> = if opts.jobs == Some(1) {
        let mut out = Vec::with_capacity(inputs.len());
        for (i, m) in inputs.iter().enumerate() {
            let t = eval(m);
            let failed = t.iter().any(|t| t.failures > 0);
            out.push((i, t));
            if failed && opts.fail_fast {
                break;
            }
        }
        out
    } else {
        let work = || inputs.par_iter().enumerate().map(|(i, m)| (i, eval(m))).collect();
        match opts.jobs {
            Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool").install(work),
            None => work(),
        }
    };

    let summaries = laws
        .iter()
        .enumerate()
        .map(|(k, law)| {
            let mut total = Tally::default();
            let mut first: Option<(usize, Option<Segment>, Failure)> = None;
            for (i, tallies) in &per_input {
                let t = &tallies[k];
                total.checked += t.checked;
                total.fired += t.fired;
                total.failures += t.failures;
                if first.is_none() {
                    if let Some((d, f)) = &t.first {
                        first = Some((*i, *d, f.clone()));
                    }
                }
            }
            let counterexample = first.map(|(i, d, f)| counterexample(law, &inputs[i], d, f, opts.shrink));
            let status = if total.failures > 0 {
                LawStatus::Counterexample
            } else if opts.require_min_fired && total.fired < law.min_fired {
                LawStatus::Dead
            } else {
                LawStatus::Pass
            };
            LawSummary {
                law_id: law.id.to_string(),
                criterion: law.criterion,
                status,
                checked: total.checked,
                fired: total.fired,
                min_fired: law.min_fired,
                failures: total.failures,
                counterexample,
            }
        })
        .collect();
    RunReport { bounds: None, universe_size: inputs.len(), windows: windows.len(), laws: summaries }
}

fn counterexample(law: &Law, m: &Multisegment, d: Option<Segment>, failure: Failure, shrink: bool) -> LawReport {
    let (sm, sd, sf) = if shrink { shrink_failure(law, m, d, failure) } else { (m.clone(), d, failure) };
    let mut replay = format!("multiseg check --law {} --input \"{}\"", law.id, sm);
    if let Some(d) = sd {
        let _ = write!(replay, " --seg \"{d}\"");
    }
    LawReport {
        law_id: law.id.to_string(),
        input: sm.to_string(),
        window: sd.map(|d| d.to_string()),
        params: sf.params,
        verdict: Verdict::Counterexample,
        lhs: sf.lhs,
        rhs: sf.rhs,
        replay,
        shrunk_from: (sm != *m || sd != d).then(|| match d {
            Some(d) => format!("{m} with window {d}"),
            None => m.to_string(),
        }),
    }
}

fn candidates(m: &Multisegment, d: Option<Segment>) -> Vec<(Multisegment, Option<Segment>)> {
    let mut out = Vec::new();
    let segs = m.segments();
    for (i, s) in segs.iter().enumerate() {
        if i > 0 && segs[i - 1] == *s {
            continue;
        }
        let rest = m.without(*s).expect("present");
        out.push((rest.clone(), d));
        for t in [s.shrink_left(), s.shrink_right()].into_iter().flatten() {
            out.push((rest.with(t), d));
        }
    }
    if let Some(d) = d {
        for t in [d.shrink_left(), d.shrink_right()].into_iter().flatten() {
            out.push((m.clone(), Some(t)));
        }
    }
    out
}

/// Greedy shrinking: keep any smaller input on which the law still fails.
fn shrink_failure(
    law: &Law,
    m: &Multisegment,
    d: Option<Segment>,
    failure: Failure,
) -> (Multisegment, Option<Segment>, Failure) {
    let mut cur = (m.clone(), d, failure);
    'outer: loop {
        for (cm, cd) in candidates(&cur.0, cur.1) {
            if let Some(f) = law.eval(&cm, cd).failure {
                cur = (cm, cd, f);
                continue 'outer;
            }
        }
        return cur;
    }
}
