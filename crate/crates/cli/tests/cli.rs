use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn cotilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotilt")).current_dir(root()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn dual_lambda_is_zero_cotilting() {
    let o = cotilt(&["cotilt", "verify", "a4/4.toml", "a4/43.toml", "a4/432.toml", "a4/4321.toml", "-n", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("id = 0"));
    // A simple projective that is not injective is not cotilting.
    let o = cotilt(&["cotilt", "verify", "a4/1.toml", "-n", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes_follow_the_verdict() {
    assert_eq!(cotilt(&["pipeline", "main2", "configs/a4-main2.toml"]).status.code(), Some(0));
    let o = cotilt(&["pipeline", "main1", "configs/a5-main1.toml"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("obstructed"));
    assert_eq!(cotilt(&["pipeline", "main2", "configs/nakayama-main1.toml"]).status.code(), Some(2));
    assert_eq!(cotilt(&["module", "validate", "no/such.toml"]).status.code(), Some(2));
    assert_eq!(cotilt(&["--field", "p=17", "hom", "a4/1.toml", "a4/1.toml"]).status.code(), Some(2));
}

#[test]
fn pipeline_text_quotes_the_headline_numbers() {
    let t = stdout(&cotilt(&["pipeline", "main2", "configs/a4-main2.toml"]));
    assert!(t.contains("injective dimension = 2") && t.contains("census = 10"));
    let t = stdout(&cotilt(&["pipeline", "main1", "configs/nakayama-main1.toml"]));
    assert!(t.contains("vertices = 4") && t.contains("arrows = 5") && t.contains("overall: pass"));
}

#[test]
fn fields_agree_on_the_main2_pipeline() {
    for f in ["q", "p=7", "p=1009"] {
        let o = cotilt(&["--field", f, "report", "--format", "csv", "configs/a4-main2.toml"]);
        assert_eq!(o.status.code(), Some(0), "{f}");
        assert!(stdout(&o).contains("perp-census,pass,fact,census,10"));
    }
}

#[test]
fn module_commands() {
    let o = cotilt(&["module", "decompose", "a4/4321.toml"]);
    assert!(stdout(&o).contains("1 indecomposable"));
    // τ S(2) = S(1) over A4.
    let o = cotilt(&["module", "tau", "a4/2.toml"]);
    assert!(stdout(&o).contains("dims = [1, 0, 0, 0]"), "{}", stdout(&o));
    assert!(stdout(&cotilt(&["module", "dual", "a4/21.toml"])).contains("[1, 1, 0, 0]"));
    assert!(stdout(&cotilt(&["hom", "a4/1.toml", "a4/4321.toml"])).ends_with("= 1\n"));
    let e = stdout(&cotilt(&["ext", "a4/2.toml", "a4/1.toml", "--max-i", "2"]));
    assert!(e.contains("Ext^1(2, 1) = 1") && e.contains("Ext^2(2, 1) = 0"), "{e}");
}

#[test]
fn conflations_and_quotients() {
    let ok = cotilt(&["conflation", "check", "sequences/a4-s1-p2-s2.toml"]);
    assert_eq!(ok.status.code(), Some(0));
    // The identity of S(1) does not extend over P(2), so the sequence is not (-, S(1))-exact.
    let to_c = ["conflation", "check", "sequences/a4-s1-p2-s2.toml", "--structure", "to-c", "--subcat", "subcats/a4-s1.toml"];
    assert_eq!(cotilt(&to_c).status.code(), Some(1));
    let from_c = ["conflation", "check", "sequences/a4-s1-p2-s2.toml", "--structure", "from-c", "--subcat", "subcats/a4-s1.toml"];
    assert_eq!(cotilt(&from_c).status.code(), Some(0));
    assert_eq!(cotilt(&["conflation", "check", "sequences/a4-s1-p2-s2.toml", "--structure", "to-c"]).status.code(), Some(2));
    let sub = "subcats/nakayama-s1.toml";
    let q = cotilt(&["quotient", "hom", "nakayama/12.toml", "nakayama/1.toml", "--subcat", sub]);
    assert!(stdout(&q).contains("quotient 0"), "{}", stdout(&q));
    let f = cotilt(&["quotient", "factor", "a5/3.toml", "a5/43.toml", "--subcat", "subcats/a5-m.toml", "--fixtures", "a5"]);
    assert_eq!(f.status.code(), Some(1));
    assert!(stdout(&f).contains("3 -> 43 #0: obstructed"));
}

#[test]
fn endalg_and_enumerate() {
    let o = cotilt(&["endalg", "a4/1.toml", "a4/21.toml", "a4/321.toml", "a4/4321.toml", "a4/3.toml"]);
    let t = stdout(&o);
    assert!(t.contains("vertices = 5") && t.contains("relations = ["), "{t}");
    let o = cotilt(&["enumerate", "algebras/reference-gamma-main2.toml"]);
    assert!(stdout(&o).ends_with("13 indecomposables\n"));
    let o = cotilt(&["perp", "census", "--u", "a4/4.toml", "a4/43.toml", "a4/432.toml", "a4/4321.toml", "--fixtures", "a4"]);
    assert!(stdout(&o).contains("10 of 10"));
}

#[test]
fn corpus_verifies() {
    let o = cotilt(&["fixtures", "verify", "."]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn regeneration_reproduces_the_manifest() {
    let dir = std::env::temp_dir().join(format!("cotilt-fixtures-{}", std::process::id()));
    let o = cotilt(&["fixtures", "generate", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let fresh = std::fs::read_to_string(dir.join("MANIFEST.sha256")).unwrap();
    let frozen = std::fs::read_to_string(root().join("MANIFEST.sha256")).unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(fresh, frozen);
}
