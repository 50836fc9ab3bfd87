use std::process::{Command, Output};

fn zeta_atlas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta-atlas"))
        .args(args)
        .env_remove("ZETA_ATLAS_CONFIG")
        .env_remove("SOURCE_DATE_EPOCH")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_clausen_at_half_pi_is_catalan() {
    let o = zeta_atlas(&["eval", "clausen", "2", "pi/2"]);
    assert!(o.status.success());
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 0.915_965_594_177_219).abs() < 1e-15);
}

#[test]
fn eval_negative_and_unknown() {
    let o = zeta_atlas(&["eval", "polylog", "2", "-1"]);
    assert!(o.status.success(), "{o:?}");
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v + std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-15);
    assert_eq!(zeta_atlas(&["eval", "no_such"]).status.code(), Some(2));
    assert_eq!(zeta_atlas(&["eval", "clausen", "2"]).status.code(), Some(2));
    assert_eq!(zeta_atlas(&["eval", "riemann_zeta", "1"]).status.code(), Some(1));
    let list = stdout(&zeta_atlas(&["eval", "--list"]));
    assert!(list.lines().any(|l| l.starts_with("clausen(n, theta)")));
}

#[test]
fn list_respects_the_filter() {
    let o = zeta_atlas(&["list", "--filter", "eq-2.7?"]);
    assert!(o.status.success());
    let ids: Vec<String> = stdout(&o).lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
    assert!(ids.contains(&"eq-2.73".to_string()));
    assert!(ids.iter().all(|i| i.starts_with("eq-2.7")));
}

#[test]
fn check_exit_codes() {
    let ok = zeta_atlas(&["check", "--filter", "eq-2.73", "--format", "csv"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains(",misprint_confirmed,"));
    let failing = zeta_atlas(&["check", "--filter", "eq-2.23", "--tol-scale", "1e-10"]);
    assert_eq!(failing.status.code(), Some(1));
    assert_eq!(zeta_atlas(&["check", "--tol-scale=-1"]).status.code(), Some(2));
    assert_eq!(zeta_atlas(&["check", "--filter", "eq-["]).status.code(), Some(2));
    assert_eq!(zeta_atlas(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn config_file_sets_defaults_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("zeta-atlas-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("atlas.conf");
    std::fs::write(&cfg, "format = markdown\ntol-scale = 1e-10\n").unwrap();
    let cfg_s = cfg.to_str().unwrap();

    let md = zeta_atlas(&["--config", cfg_s, "check", "--filter", "eq-2.23"]);
    assert_eq!(md.status.code(), Some(1), "config tol-scale applies");
    assert!(stdout(&md).contains("## eq-2.*"));

    let flags = zeta_atlas(&["--config", cfg_s, "check", "--filter", "eq-2.23", "--tol-scale", "1", "--format", "json"]);
    assert_eq!(flags.status.code(), Some(0));
    assert!(stdout(&flags).starts_with('{'));

    let via_env = Command::new(env!("CARGO_BIN_EXE_zeta-atlas"))
        .args(["check", "--filter", "eq-2.23"])
        .env("ZETA_ATLAS_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(1));

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(zeta_atlas(&["--config", cfg_s, "constants"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("zeta-atlas-out-{}.json", std::process::id()));
    let o = zeta_atlas(&["check", "--filter", "eq-2.4", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report = zeta_atlas::registry::parse_json_report(&text).unwrap();
    assert_eq!(report.outcomes.len(), 1);
    assert_eq!(report.started_at, "1970-01-01T00:00:00Z");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn constants_are_printed() {
    let text = stdout(&zeta_atlas(&["constants"]));
    assert!(text.contains("zeta3") && text.contains("catalan_G"));
}
