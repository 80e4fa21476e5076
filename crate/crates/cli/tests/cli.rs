use std::path::Path;
use std::process::{Command, Output};

use hdgroups::small_group;
use hdgroups_cli::cache::{Cache, CacheError, CacheRecord};

fn hdgroups(args: &[&str], cache: Option<&Path>, stdin: Option<&str>) -> Output {
    use std::io::Write;
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hdgroups"));
    cmd.env_remove("HDGROUPS_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    cmd.args(args)
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cached_and_cold_tables_are_identical() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("nested/cache");
    let cold = hdgroups(&["table", "--max-order", "12"], None, None);
    let first = hdgroups(&["table", "--max-order", "12"], Some(&dir), None);
    assert!(dir.join("12-3.hdg").exists());
    let second = hdgroups(&["table", "--max-order", "12"], Some(&dir), None);
    assert!(cold.status.success());
    assert_eq!(cold.stdout, first.stdout);
    assert_eq!(cold.stdout, second.stdout);
    assert!(second.stderr.is_empty());
    let text = stdout(&cold);
    assert!(text.starts_with("order,id,name,ie,cat1,cat1_classes,cat2,cat2_classes,bad_diagonals\n"));
    assert!(text.lines().any(|l| l.starts_with("8,3,") && l.ends_with(",10,9,3,21,6,1")), "{text}");
}

#[test]
fn table_check_reports_mismatches_and_skipped_rows() {
    let ok = hdgroups(&["table", "--max-order", "8", "--check", "--format", "tsv"], None, None);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("8\t3\t"));
    let out = hdgroups(&["table", "--max-order", "16", "--check"], None, None);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("16/14: skipped"));
    assert!(err.contains("mismatch: 16/11 bad_diagonals: computed 5, published 6"), "{err}");
    assert!(stdout(&out).lines().any(|l| l.starts_with("16,14,") && l.ends_with("skipped")));
}

fn corrupt(cache: &Cache, from: &str, to: &str) {
    let path = cache.path(8, 3);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains(from));
    std::fs::write(&path, text.replacen(from, to, 1)).unwrap();
}

#[test]
fn cache_failures_are_distinguished() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = Cache::new(tmp.path().join("c"));
    let g = small_group(8, 3).unwrap();
    assert!(matches!(cache.load(8, 3, &g), Err(CacheError::Missing(_))));
    let record = CacheRecord::compute(8, 3, &g);
    cache.store(&record).unwrap();
    assert_eq!(cache.load(8, 3, &g).unwrap(), record);

    corrupt(&cache, "hdgroups 1 cache", "hdgroups 7 cache");
    assert!(matches!(cache.load(8, 3, &g), Err(CacheError::Version { found: 7, expected: 1, .. })));

    cache.store(&record).unwrap();
    corrupt(&cache, "key 8 3", "key 8 2");
    assert!(matches!(cache.load(8, 3, &g), Err(CacheError::Malformed { .. })));

    // A record that is internally consistent but belongs to a group with a
    // different idempotent count.
    let other = CacheRecord { order: 8, id: 3, ..CacheRecord::compute(8, 4, &small_group(8, 4).unwrap()) };
    cache.store(&other).unwrap();
    assert!(matches!(cache.load(8, 3, &g), Err(CacheError::Fingerprint { found: (8, 2), expected: (8, 10), .. })));

    std::fs::write(cache.path(8, 3), "not a cache\n").unwrap();
    assert!(matches!(cache.load(8, 3, &g), Err(CacheError::Malformed { .. })));

    let mut warnings = Vec::new();
    let fresh = cache.load_or_compute(8, 3, &g, |e| warnings.push(e.to_string()));
    assert_eq!(fresh, record);
    assert_eq!(warnings.len(), 1);
    assert_eq!(cache.load(8, 3, &g).unwrap(), record);
}

#[test]
fn binary_warns_and_recovers_from_a_stale_cache() {
    let tmp = tempfile::tempdir().unwrap();
    let cache = Cache::new(tmp.path());
    let g = small_group(8, 3).unwrap();
    cache.store(&CacheRecord::compute(8, 3, &g)).unwrap();
    corrupt(&cache, "hdgroups 1 cache", "hdgroups 0 cache");
    let out = hdgroups(&["inspect", "cat2", "8", "3", "total"], Some(tmp.path()), None);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "21\n");
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("format version 0") && err.contains("recomputing"), "{err}");
    assert!(cache.load(8, 3, &g).is_ok());
}

#[test]
fn inspect_selectors() {
    assert_eq!(stdout(&hdgroups(&["inspect", "cat1", "12", "3", "count"], None, None)), "2\n");
    assert_eq!(stdout(&hdgroups(&["inspect", "cat1", "12", "3", "total"], None, None)), "5\n");
    let families = stdout(&hdgroups(&["inspect", "cat2", "8", "2", "families"], None, None));
    assert!(families.contains("families 14\n"), "{families}");
    let out = hdgroups(&["inspect", "cat1", "8", "3", "10"], None, None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr.clone()).unwrap().contains("there are 9 structures"));
    assert_eq!(hdgroups(&["inspect", "cat1", "8", "3", "0"], None, None).status.code(), Some(2));
    assert_eq!(hdgroups(&["inspect", "cat1", "8", "9", "count"], None, None).status.code(), Some(2));
}

#[test]
fn d8_structures_round_trip_through_the_text_format() {
    for k in 1..=9 {
        let doc = stdout(&hdgroups(&["inspect", "cat1", "8", "3", &k.to_string()], None, None));
        let checked = hdgroups(&["check", "-"], None, Some(&doc));
        assert!(checked.status.success(), "cat1 #{k}: {}", stdout(&checked));
    }
    for k in 1..=21 {
        let cat2 = stdout(&hdgroups(&["inspect", "cat2", "8", "3", &k.to_string()], None, None));
        let xsq = stdout(&hdgroups(&["inspect", "xsq", "8", "3", &k.to_string()], None, None));
        let converted = hdgroups(&["convert", "-"], None, Some(&cat2));
        assert!(converted.status.success());
        assert_eq!(stdout(&converted), xsq, "cat2 #{k}");
        assert!(hdgroups(&["check", "-"], None, Some(&xsq)).status.success(), "xsq #{k}");
        let back = hdgroups(&["convert", "-"], None, Some(&xsq));
        let report = hdgroups(&["check", "-"], None, Some(&stdout(&back)));
        assert!(report.status.success(), "cat2 of xsq #{k}: {}", stdout(&report));
    }
}

#[test]
fn invalid_documents_are_rejected() {
    let out = hdgroups(&["check", "-"], None, Some("hdgroups 1 nonsense\n"));
    assert_eq!(out.status.code(), Some(2));
    let out = hdgroups(&["convert", "-"], None, Some("hdgroups 2 cat2\n"));
    assert_eq!(out.status.code(), Some(2));
    let mut doc = stdout(&hdgroups(&["inspect", "xsq", "8", "3", "5"], None, None));
    let pairing = doc.find("pairing").unwrap();
    let line_end = pairing + doc[pairing..].find('\n').unwrap() + 1;
    let row_end = line_end + doc[line_end..].find('\n').unwrap();
    let row = doc[line_end..row_end].to_string();
    doc.replace_range(line_end..row_end, &row.replace('0', "1"));
    let out = hdgroups(&["check", "-"], None, Some(&doc));
    assert_ne!(out.status.code(), Some(0));
}
