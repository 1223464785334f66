use std::process::{Command, Output};

fn parkpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parkpos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parkpos(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rank_census_csv() {
    assert_eq!(stdout(&["count", "--n", "3", "--k", "1"]), "l,count\n0,1\n1,9\n2,6\n");
    assert_eq!(stdout(&["count", "--n", "3", "--k", "1", "--l", "1"]), "l,count\n1,9\n");
}

#[test]
fn chain_table() {
    let t = stdout(&["count", "--n", "4", "--k", "2", "--table"]);
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines[0], "n,k,l,closed,oracle,series");
    assert_eq!(lines[2], "4,2,1,56,56,56");
    assert_eq!(lines.len(), 5);
    let w = stdout(&["count", "--n", "3", "--stat", "whitney"]);
    assert_eq!(w, "l,second,first,first_closed\n0,1,1,1\n1,9,-9,-9\n2,6,12,12\n");
    let m = stdout(&["count", "--n", "4", "--stat", "mobius"]);
    assert_eq!(m, "n,mobius,closed\n4,27,27\n");
    let z = stdout(&["count", "--n", "3", "--k", "2", "--stat", "zeta"]);
    assert_eq!(z, "k,count,closed\n1,16,16\n2,49,49\n");
}

#[test]
fn series_dump() {
    let s = stdout(&["count", "--n", "3", "--series", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["egf"]["3,1"], "9");
}

#[test]
fn convert_word_to_tree() {
    let s = stdout(&["convert", "--from", "word", "--to", "tree", "--input", "1325271"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["label"], serde_json::json!([1, 7]));
    assert_eq!(v["children"].as_array().unwrap().len(), 2);
    let back = stdout(&["convert", "--from", "tree", "--to", "word", "--input", s.trim()]);
    let w: serde_json::Value = serde_json::from_str(&back).unwrap();
    assert_eq!(w, serde_json::json!([1, 3, 2, 5, 2, 7, 1]));
}

#[test]
fn homology_tables() {
    let c = stdout(&["homology", "--n", "3", "--character"]);
    assert!(c.contains("1.1.1,4,4,4,true"));
    assert!(c.contains("2.1,-2,-2,-2,true"));
    assert!(c.contains("\n3,1,1,1,true"));
    assert_eq!(stdout(&["homology", "--n", "3"]), "degree,rank\n-1,0\n0,0\n1,4\n");
}

#[test]
fn poset_exports() {
    let d = stdout(&["poset", "--n", "2", "--format", "dot"]);
    assert!(d.starts_with("digraph"));
    assert!(d.contains("label=\"11\""));
    let j: serde_json::Value = serde_json::from_str(&stdout(&["poset", "--n", "3"])).unwrap();
    assert_eq!(j["n"], 16);
    let c = stdout(&["poset", "--n", "4", "--kind", "nc", "--format", "csv"]);
    assert_eq!(c.lines().count(), 15);
}

#[test]
fn shelling_and_cluster_reports() {
    let s: serde_json::Value = serde_json::from_str(&stdout(&["shelling", "--n", "3"])).unwrap();
    let checks = s["checks"].as_array().unwrap();
    assert_eq!(checks[0]["domain"], 18);
    assert!(checks.iter().all(|c| c["holds"] == true));
    let c = stdout(&["cluster", "--n", "3"]);
    assert_eq!(c, "l,cluster_whitney,signed_first_kind,match\n0,1,1,true\n1,9,9,true\n2,12,12,true\n");
    let f = stdout(&["cluster", "--n", "4", "--forests"]);
    // five facets, and the boundary is a circle
    assert_eq!(f, "degree,faces,boundary_rank\n-1,1,0\n0,6,0\n1,10,1\n2,5,\n");
}

#[test]
fn kdivisible_views() {
    assert_eq!(
        stdout(&["kdivisible", "--n", "3", "--k", "2"]),
        "l,nc_k,pp_k,divisible_nc\n0,1,1,1\n1,6,18,6\n2,5,30,5\n"
    );
    let c = stdout(&["kdivisible", "--n", "3", "--k", "2", "--character"]);
    assert!(c.contains("1.1.1,25,25,25,25,true"));
    let j: serde_json::Value =
        serde_json::from_str(&stdout(&["kdivisible", "--n", "2", "--k", "2", "--view", "divisible-nc"])).unwrap();
    assert_eq!(j["n"], 3);
}

#[test]
fn verify_all_quick() {
    let s = stdout(&["verify-all", "--n", "3", "--jobs", "2"]);
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS")).count(), 12);
    assert!(s.ends_with("12/12 criteria passed\n"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["count", "--n", "4", "--k", "3", "--table", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let path = std::env::temp_dir().join(format!("parkpos-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["count", "--n", "3", "--output", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "l,count\n0,1\n1,9\n2,6\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn argument_errors_exit_with_two() {
    for args in [
        vec!["count"],
        vec!["count", "--n", "3", "--bogus"],
        vec!["shelling", "--n", "5"],
        vec!["homology", "--n", "9"],
        vec!["convert", "--from", "word", "--to", "tree", "--input", "33"],
        vec!["convert", "--from", "nope", "--to", "tree", "--input", "1"],
        vec!["kdivisible", "--n", "3", "--k", "4"],
        vec!["count", "--n", "3", "--format", "dot"],
    ] {
        let out = parkpos(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
