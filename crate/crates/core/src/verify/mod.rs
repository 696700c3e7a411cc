//! Seeded verification suites, the check registry and report output.

mod appendices;
mod fields;
mod geometry;
mod groups;

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::lfield::FieldInstance;
use crate::moufang::MoufangSet;
use crate::net::Tally;
use crate::quadrangle::Quadrangle;
use crate::root_groups::{Eq3Slot, Relations};
use crate::sample::Sampler;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Fields,
    RootGroups,
    Quadrangle,
    Moufang,
    Appendices,
    Reconstruction,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Fields,
        Suite::RootGroups,
        Suite::Quadrangle,
        Suite::Moufang,
        Suite::Appendices,
        Suite::Reconstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fields => "fields",
            Suite::RootGroups => "root-groups",
            Suite::Quadrangle => "quadrangle",
            Suite::Moufang => "moufang",
            Suite::Appendices => "appendices",
            Suite::Reconstruction => "reconstruction",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_degree: usize,
    pub suites: Vec<Suite>,
    pub eq3_slot: Eq3Slot,
    pub survey: bool,
    pub instance: FieldInstance,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 100,
            max_degree: 3,
            suites: Suite::ALL.to_vec(),
            eq3_slot: Eq3Slot::Three,
            survey: false,
            instance: FieldInstance::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub name: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    /// Survey records never change the exit status.
    pub survey: bool,
    pub counterexample: Option<String>,
    pub detail: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Jsonl,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records
            .iter()
            .all(|r| r.survey || r.status != Status::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    /// The report with timings, or with every `millis` set to zero.
    pub fn emit(&self, format: Format, timing: bool) -> String {
        let mut out = String::new();
        match format {
            Format::Jsonl => {
                for r in &self.records {
                    let r = Record {
                        millis: if timing { r.millis } else { 0 },
                        ..r.clone()
                    };
                    out.push_str(&serde_json::to_string(&r).expect("plain record"));
                    out.push('\n');
                }
            }
            Format::Text => {
                let _ = writeln!(out, "{:<24} {:<6} {:>8}  anchor", "check", "status", "ms");
                let mut suite = "";
                for r in &self.records {
                    if r.suite != suite {
                        suite = r.suite;
                        let _ = writeln!(out, "[{suite}]");
                    }
                    let status = match (r.status, r.survey) {
                        (Status::Pass, _) => "pass",
                        (Status::Skip, _) => "skip",
                        (Status::Fail, false) => "FAIL",
                        (Status::Fail, true) => "fail*",
                    };
                    let ms = if timing { r.millis } else { 0 };
                    let _ = writeln!(out, "{:<24} {:<6} {:>8}  {}", r.name, status, ms, r.anchor);
                    if !r.detail.is_empty() {
                        let _ = writeln!(out, "    {}", r.detail);
                    }
                    if let Some(c) = &r.counterexample {
                        let _ = writeln!(out, "    counterexample: {c}");
                    }
                }
            }
        }
        out
    }

    /// The deterministic part of the report.
    pub fn body(&self) -> String {
        self.emit(Format::Jsonl, false)
    }
}

/// Outcome of one check before timing and bookkeeping.
pub struct Verdict {
    pub ok: bool,
    pub counterexample: Option<String>,
    pub detail: String,
}

impl Verdict {
    pub fn pass(detail: impl Into<String>) -> Self {
        Verdict {
            ok: true,
            counterexample: None,
            detail: detail.into(),
        }
    }

    pub fn fail(counterexample: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict {
            ok: false,
            counterexample: Some(counterexample.into()),
            detail: detail.into(),
        }
    }

    pub fn tally(t: &Tally, detail: impl Into<String>) -> Self {
        let detail = format!("{}/{} {}", t.checked - t.failed, t.checked, detail.into());
        match (&t.first_failure, t.checked) {
            (_, 0) => Verdict {
                ok: false,
                counterexample: None,
                detail: format!("{detail}, nothing checked"),
            },
            (None, _) => Verdict::pass(detail),
            (Some(c), _) => Verdict::fail(c.clone(), detail),
        }
    }

    /// Several tallies, all of which must pass.
    pub fn tallies(parts: &[(&str, &Tally)]) -> Self {
        let detail = parts
            .iter()
            .map(|(n, t)| format!("{n} {}/{}", t.checked - t.failed, t.checked))
            .collect::<Vec<_>>()
            .join(", ");
        match parts.iter().find(|(_, t)| !t.passed()) {
            None => Verdict::pass(detail),
            Some((n, t)) => Verdict {
                ok: false,
                counterexample: t.first_failure.as_ref().map(|c| format!("{n}: {c}")),
                detail,
            },
        }
    }
}

/// Everything a check needs.
pub struct Ctx<'a> {
    pub cfg: &'a SuiteConfig,
    pub inst: FieldInstance,
    pub rel: Relations,
    pub quad: Quadrangle,
    pub ms: MoufangSet,
}

type CheckFn = fn(&Ctx, &mut Sampler) -> Result<Verdict>;

struct Check {
    suite: Suite,
    name: &'static str,
    survey: bool,
    run: CheckFn,
}

const fn check(suite: Suite, name: &'static str, run: CheckFn) -> Check {
    Check {
        suite,
        name,
        survey: false,
        run,
    }
}

const fn survey(suite: Suite, name: &'static str, run: CheckFn) -> Check {
    Check {
        suite,
        name,
        survey: true,
        run,
    }
}

const REGISTRY: &[Check] = &[
    check(Suite::Fields, "tits_law", fields::tits_law),
    check(Suite::Fields, "theta_phi", fields::theta_phi),
    check(Suite::Fields, "conjugation_norm", fields::conjugation_norm),
    check(Suite::Fields, "tower", fields::tower),
    check(Suite::Fields, "instance", fields::instance),
    check(Suite::Fields, "anisotropy", fields::anisotropy),
    check(Suite::RootGroups, "associativity", groups::associativity),
    check(Suite::RootGroups, "inverse", groups::inverse),
    check(
        Suite::RootGroups,
        "commutator_slots",
        groups::commutator_slots,
    ),
    check(Suite::RootGroups, "rho_star", groups::rho_star),
    check(
        Suite::Quadrangle,
        "polarity_involution",
        geometry::polarity_involution,
    ),
    check(
        Suite::Quadrangle,
        "polarity_incidence",
        geometry::polarity_incidence,
    ),
    check(
        Suite::Quadrangle,
        "action_incidence",
        geometry::action_incidence,
    ),
    check(
        Suite::Quadrangle,
        "collinear_join",
        geometry::collinear_join,
    ),
    check(Suite::Quadrangle, "projection", geometry::projection),
    check(Suite::Moufang, "labelling", groups::labelling),
    check(Suite::Moufang, "closure", groups::closure),
    survey(Suite::Moufang, "closure_printed", groups::closure_printed),
    check(Suite::Moufang, "filtration", groups::filtration),
    check(Suite::Moufang, "regularity", groups::regularity),
    check(Suite::Moufang, "label_action", groups::label_action),
    check(
        Suite::Appendices,
        "sphere_at_infinity",
        appendices::sphere_at_infinity,
    ),
    check(
        Suite::Appendices,
        "sphere_gnarl_zero",
        appendices::sphere_gnarl_zero,
    ),
    check(
        Suite::Appendices,
        "sphere_gnarl_one",
        appendices::sphere_gnarl_one,
    ),
    check(
        Suite::Appendices,
        "sphere_translate",
        appendices::sphere_translate,
    ),
    check(
        Suite::Appendices,
        "circle_at_infinity",
        appendices::circle_at_infinity,
    ),
    check(
        Suite::Appendices,
        "circle_through_infinity",
        appendices::circle_through_infinity,
    ),
    check(
        Suite::Appendices,
        "special_circle_points",
        appendices::special_circle_points,
    ),
    survey(
        Suite::Appendices,
        "special_circle_blocks",
        appendices::special_circle_blocks,
    ),
    check(
        Suite::Appendices,
        "tau_prime_values",
        appendices::tau_prime_values,
    ),
    survey(
        Suite::Appendices,
        "tau_prime_composite",
        appendices::tau_prime_composite,
    ),
    survey(
        Suite::Appendices,
        "tau_prime_circle",
        appendices::tau_prime_circle,
    ),
    check(Suite::Appendices, "net", appendices::net),
    check(
        Suite::Reconstruction,
        "reconstruction",
        appendices::reconstruction,
    ),
];

const ANCHORS: &str = include_str!("anchors.tsv");

/// The location a check verifies, or `plumbing`.
pub fn anchor(name: &str) -> &'static str {
    ANCHORS
        .lines()
        .filter_map(|l| l.split_once('\t'))
        .find(|(n, _)| *n == name)
        .map_or("plumbing", |(_, a)| a)
}

/// Names of all registered checks with their suites.
pub fn checks() -> Vec<(Suite, &'static str)> {
    REGISTRY.iter().map(|c| (c.suite, c.name)).collect()
}

/// Run the selected suites in dependency order. A suite is skipped once
/// an earlier one has a failing non-survey check.
pub fn run(cfg: &SuiteConfig) -> Report {
    let rel = Relations::new(cfg.instance.clone()).with_eq3_slot(cfg.eq3_slot);
    let ctx = Ctx {
        cfg,
        inst: cfg.instance.clone(),
        rel: rel.clone(),
        quad: Quadrangle::new(rel.clone()),
        ms: MoufangSet::new(rel),
    };
    let mut report = Report::default();
    let mut blocked: Option<Suite> = None;
    for suite in Suite::ALL.into_iter().filter(|s| cfg.suites.contains(s)) {
        let mut suite_failed = false;
        for c in REGISTRY.iter().filter(|c| c.suite == suite) {
            let survey = c.survey || (c.name == "instance" && cfg.survey);
            let mut rec = Record {
                suite: suite.name(),
                name: c.name,
                anchor: anchor(c.name),
                status: Status::Skip,
                survey,
                counterexample: None,
                detail: String::new(),
                millis: 0,
            };
            if let Some(b) = blocked {
                rec.detail = format!("skipped: suite {} failed", b.name());
                report.records.push(rec);
                continue;
            }
            let mut s = Sampler::new(cfg.seed, cfg.max_degree).fork(c.name);
            let start = Instant::now();
            let v = (c.run)(&ctx, &mut s).unwrap_or_else(|e| Verdict::fail(e.to_string(), "error"));
            rec.millis = start.elapsed().as_millis() as u64;
            rec.status = if v.ok { Status::Pass } else { Status::Fail };
            rec.counterexample = v.counterexample;
            rec.detail = v.detail;
            suite_failed |= !v.ok && !survey;
            report.records.push(rec);
        }
        if suite_failed && blocked.is_none() {
            blocked = Some(suite);
        }
    }
    report
}
