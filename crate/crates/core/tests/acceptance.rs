use std::process::ExitCode;
use std::time::Instant;

use f4moufang::verify::{run, Record, Report, Status, Suite, SuiteConfig};
use f4moufang::Eq3Slot;

struct Line {
    ok: bool,
    text: String,
}

fn rec<'a>(r: &'a Report, name: &str) -> &'a Record {
    r.get(name).unwrap_or_else(|| panic!("no record {name}"))
}

fn secs(r: &Report, names: &[&str]) -> f64 {
    names.iter().map(|n| rec(r, n).millis).sum::<u64>() as f64 / 1000.0
}

/// All named records pass within `budget` seconds.
fn passing(r: &Report, names: &[&str], budget: f64) -> Line {
    let t = secs(r, names);
    let failed: Vec<_> = names
        .iter()
        .filter(|n| rec(r, n).status != Status::Pass)
        .collect();
    let details: Vec<_> = names
        .iter()
        .map(|n| format!("{n}: {}", rec(r, n).detail))
        .collect();
    let mut text = format!("{} ({t:.1} s of {budget} s)", details.join("; "));
    if !failed.is_empty() {
        text = format!("failing {failed:?}; {text}");
    }
    Line {
        ok: failed.is_empty() && t < budget,
        text,
    }
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let start = Instant::now();
    let a = run(&cfg);
    let first = start.elapsed().as_secs_f64();

    let slot2 = run(&SuiteConfig {
        eq3_slot: Eq3Slot::Two,
        suites: vec![Suite::RootGroups],
        ..SuiteConfig::default()
    });

    let mut lines = Vec::new();
    lines.push(passing(&a, &["tits_law", "theta_phi"], 5.0));
    lines.push(passing(&a, &["anisotropy"], 30.0));

    let assoc = rec(&slot2, "associativity");
    let mut c3 = passing(&a, &["associativity"], 30.0);
    let witness = assoc.status == Status::Fail
        && assoc
            .counterexample
            .as_deref()
            .is_some_and(|c| c.contains("(gh)k"));
    c3.ok &= witness;
    c3.text = format!(
        "slot 3: {}; slot 2: {} with counterexample triple",
        c3.text, assoc.detail
    );
    lines.push(c3);

    lines.push(passing(
        &a,
        &["polarity_involution", "polarity_incidence"],
        20.0,
    ));
    lines.push(passing(&a, &["labelling"], 30.0));

    let printed = rec(&a, "closure_printed");
    let mut c6 = passing(&a, &["closure"], 30.0);
    let localized = printed
        .counterexample
        .as_deref()
        .and_then(|c| c.split("; term ").nth(1));
    c6.text = match (printed.status, localized) {
        (Status::Pass, _) => format!("printed form closes; {}", c6.text),
        (Status::Fail, Some(term)) => format!(
            "printed form FAILS ({}), localized to term {term}; centralizer {}",
            printed.detail, c6.text
        ),
        _ => {
            c6.ok = false;
            format!("printed form fails without localization; {}", c6.text)
        }
    };
    lines.push(c6);

    lines.push(passing(&a, &["filtration"], 20.0));
    lines.push(passing(
        &a,
        &["sphere_gnarl_zero", "sphere_gnarl_one", "sphere_translate"],
        60.0,
    ));

    let names = [
        "circle_at_infinity",
        "circle_through_infinity",
        "special_circle_points",
    ];
    let mut c9 = passing(&a, &names, 30.0);
    let tau = rec(&a, "tau_prime_circle");
    c9.ok &=
        tau.status != Status::Skip && secs(&a, &["tau_prime_circle"]) + secs(&a, &names) < 30.0;
    c9.text = format!("{}; tau' experiment: {}", c9.text, tau.detail);
    lines.push(c9);

    lines.push(passing(&a, &["net"], 60.0));
    lines.push(passing(&a, &["reconstruction"], 120.0));

    let start = Instant::now();
    let b = run(&cfg);
    let second = start.elapsed().as_secs_f64();
    let same = a.body() == b.body();
    lines.push(Line {
        ok: same && second < 2.0 * first,
        text: format!("bodies identical: {same}; runs {first:.1} s and {second:.1} s"),
    });

    let mut all = true;
    for (i, l) in lines.iter().enumerate() {
        all &= l.ok;
        println!(
            "criterion {:>2}: {}  {}",
            i + 1,
            if l.ok { "PASS" } else { "FAIL" },
            l.text
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
