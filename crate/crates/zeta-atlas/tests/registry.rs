use std::collections::HashSet;

use proptest::prelude::*;
use zeta_atlas::registry::{
    audit_registry, build_registry, compare_ids, parse_json_report, render_report, run_checks, select, Expected,
    ReportFormat, RunOptions, Status,
};

fn opts(filter: &str) -> RunOptions {
    RunOptions { filter: filter.to_string(), ..RunOptions::default() }
}

#[test]
fn registry_is_consistent() {
    let records = build_registry();
    assert!(records.len() >= 60);
    assert!(audit_registry(&records).is_empty());
    let ids: HashSet<_> = records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids.len(), records.len());
    for w in records.windows(2) {
        assert!(compare_ids(&w[0].id, &w[1].id).is_lt(), "{} then {}", w[0].id, w[1].id);
    }
    for r in &records {
        assert_eq!(r.corrected_form.is_some(), r.expected == Expected::MisprintSuspect, "{}", r.id);
    }
}

#[test]
fn required_coverage() {
    let records = build_registry();
    let ids: HashSet<_> = records.iter().map(|r| r.id.as_str()).collect();
    let mut wanted: Vec<String> = ["1.2", "1.21", "1.22", "1.23", "1.24", "1.25", "2.1", "2.2", "2.3", "2.4", "2.7"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    wanted.extend((11..=18).map(|n| format!("1.{n}")));
    for n in [9, 11, 12, 13, 14, 17, 18, 20, 21, 22, 23, 26, 27, 30, 31, 32] {
        wanted.push(format!("2.{n}"));
    }
    wanted.extend(["2.10.1", "2.11.1", "2.11.2", "2.12.1", "2.21.1", "2.22.1"].map(String::from));
    for range in [5..=8, 33..=53, 55..=58, 61..=88, 90..=100] {
        wanted.extend(range.map(|n| format!("2.{n}")));
    }
    for n in [4, 7, 11, 12, 14, 15, 17, 18, 19, 20, 21, 22, 25] {
        wanted.push(format!("3.{n}"));
    }
    // 2.54 is an expression rather than an identity and 3.20 does not exist
    let skipped = ["2.54", "3.20"];
    let missing: Vec<_> = wanted
        .iter()
        .filter(|n| !skipped.contains(&n.as_str()))
        .filter(|n| !ids.contains(format!("eq-{n}").as_str()))
        .collect();
    assert!(missing.is_empty(), "missing {missing:?}");
    assert!(ids.contains("eq-3.14-bromwich"));
}

#[test]
fn catalan_record_passes() {
    let records = build_registry();
    let r = run_checks(&records, &opts("eq-2.66")).unwrap();
    assert_eq!(r.outcomes.len(), 1);
    assert_eq!(r.outcomes[0].status, Status::Pass);
}

#[test]
fn batir_misprint_is_confirmed() {
    let records = build_registry();
    let r = run_checks(&records, &opts("eq-2.73")).unwrap();
    let o = &r.outcomes[0];
    assert_eq!(o.status, Status::MisprintConfirmed);
    let c = o.corrected.as_ref().unwrap();
    assert!(c.abs_diff < 1e-7);
    assert!((o.rel_diff - 0.5).abs() < 1e-6);
}

#[test]
fn tolerance_of_the_slow_sum() {
    let records = build_registry();
    assert_eq!(records.iter().find(|r| r.id == "eq-2.23").unwrap().tolerance, 1e-7);
}

#[test]
fn filters_and_scales() {
    let records = build_registry();
    let some = select(&records, "eq-2.4*").unwrap();
    assert!(some.iter().all(|r| r.id.starts_with("eq-2.4")));
    assert!(some.iter().any(|r| r.id == "eq-2.48-cl3"));
    assert!(select(&records, "eq-[").is_err());
    let bad = RunOptions { tol_scale: 0.0, ..RunOptions::default() };
    assert!(run_checks(&records, &bad).is_err());
    let none = run_checks(&records, &opts("nothing-matches")).unwrap();
    assert!(none.outcomes.is_empty() && none.summary.is_success());
}

#[test]
fn a_tight_tolerance_turns_passes_into_failures() {
    let records = build_registry();
    let tight = RunOptions { filter: "eq-2.23".into(), tol_scale: 1e-10, ..RunOptions::default() };
    let r = run_checks(&records, &tight).unwrap();
    assert_eq!(r.outcomes[0].status, Status::Fail);
    assert!(!r.summary.is_success());
}

#[test]
fn json_round_trip_of_a_real_report() {
    let records = build_registry();
    let report = run_checks(&records, &opts("eq-2.2*")).unwrap();
    let mut bytes = Vec::new();
    render_report(&report, ReportFormat::Json, &mut bytes).unwrap();
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.ends_with('\n') && !text.contains('\r'));
    assert_eq!(parse_json_report(&text).unwrap(), report);
}

#[test]
fn csv_has_one_row_per_outcome() {
    let records = build_registry();
    let report = run_checks(&records, &opts("eq-2.1*")).unwrap();
    let mut bytes = Vec::new();
    render_report(&report, ReportFormat::Csv, &mut bytes).unwrap();
    let text = String::from_utf8(bytes).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "id,sample,lhs,rhs,abs_diff,rel_diff,status,terms,seconds");
    assert_eq!(lines.len(), report.outcomes.len() + 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn outcome_order_ignores_filter_shape(i in 0usize..150) {
        let records = build_registry();
        let r = &records[i % records.len()];
        let alone = run_checks(&records, &opts(&r.id)).unwrap();
        let n = alone.outcomes.iter().filter(|o| o.id == r.id).count();
        prop_assert_eq!(n, r.samples.len());
        for (o, s) in alone.outcomes.iter().zip(&r.samples) {
            prop_assert_eq!(&o.sample, &s.label);
        }
    }

    #[test]
    fn status_follows_the_tolerance_rule(scale in 1e-3f64..1e3) {
        let records = build_registry();
        let o = RunOptions { filter: "eq-3.2[34]".into(), tol_scale: scale, ..RunOptions::default() };
        for out in run_checks(&records, &o).unwrap().outcomes {
            let pass = out.abs_diff.min(out.rel_diff) <= out.tolerance;
            prop_assert_eq!(pass, out.status == Status::Pass, "{} {}", out.id, out.sample);
        }
    }
}
