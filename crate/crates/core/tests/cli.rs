use std::process::Command as Proc;

use detsurf::cli::{render, Command, Format, RunConfig};
use serde_json::Value;

fn schema_for(def: &str) -> jsonschema::JSONSchema {
    let raw = include_str!("../docs/output-schema.json");
    let mut schema: Value = serde_json::from_str(raw).unwrap();
    schema["$ref"] = Value::String(format!("#/$defs/{def}"));
    jsonschema::JSONSchema::options().with_draft(jsonschema::Draft::Draft202012).compile(&schema).unwrap()
}

fn json_of(cmd: Command) -> Value {
    let (text, _) = render(&RunConfig::new(cmd).with_format(Format::Json)).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn assert_valid(def: &str, value: &Value) {
    let schema = schema_for(def);
    if let Err(errors) = schema.validate(value) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{def} output violates schema: {msgs:?}");
    };
}

#[test]
fn json_outputs_match_schema() {
    for d in 3..=7 {
        assert_valid("pairs", &json_of(Command::Pairs { d, raw_pairs: false, no_transpose_dedup: false }));
        assert_valid("pairs", &json_of(Command::Pairs { d, raw_pairs: true, no_transpose_dedup: true }));
        assert_valid("report", &json_of(Command::Report { d, t: None }));
        assert_valid("table", &json_of(Command::Table { d }));
    }
    assert_valid("quartics", &json_of(Command::Quartics));
    assert_valid("conjecture", &json_of(Command::Conjecture { d_max: 10 }));
    assert_valid("oracle", &json_of(Command::Oracle { d: 3 }));
    assert_valid("fermat", &json_of(Command::Fermat { d: 5 }));
}

#[test]
fn schema_rejects_malformed_output() {
    let mut v = json_of(Command::Table { d: 5 });
    v.as_object_mut().unwrap().remove("count");
    assert!(!schema_for("table").is_valid(&v));
}

#[test]
fn csv_headers() {
    let cases = [
        (Command::Pairs { d: 4, raw_pairs: false, no_transpose_dedup: false }, "d,t,a,b,reduced,dual_a,dual_b"),
        (
            Command::Report { d: 4, t: None },
            "a,b,d,t,d_C,g_C,h1_OC_d,kappa,h1_normal,hilbert_dim,dim,codim,h0_OXC,classification",
        ),
        (Command::Table { d: 4 }, "d,codims,count"),
        (Command::Quartics, "label,a,b,d_C,g_C,delta,coset,degree"),
        (Command::Conjecture { d_max: 5 }, "d,t,classes,min_dim,max_dim,pass,counterexamples"),
        (Command::Oracle { d: 3 }, "a,b,t,dim,rank,oracle_dim,seed_used,modulus,match"),
        (Command::Fermat { d: 4 }, "a,b,t,modulus,ok"),
    ];
    for (cmd, header) in cases {
        let (text, _) = render(&RunConfig::new(cmd).with_format(Format::Csv)).unwrap();
        assert_eq!(text.lines().next(), Some(header));
    }
}

#[test]
fn csv_table_row_quotes_notation() {
    let (text, _) = render(&RunConfig::new(Command::Table { d: 5 }).with_format(Format::Csv)).unwrap();
    assert_eq!(text, "d,codims,count\n5,\"2, 3, 6:4\",8\n");
}

fn bin() -> Proc {
    let mut p = Proc::new(env!("CARGO_BIN_EXE_detsurf"));
    p.env_remove(detsurf::cli::MODULUS_ENV);
    p
}

#[test]
fn binary_table_and_exit_codes() {
    let out = bin().args(["table", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "5  2, 3, 6:4  8\n");

    let out = bin().args(["table", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn binary_modulus_env_override() {
    // 19 is not 1 mod 8, so the Fermat matrix cannot be built for d = 4.
    let out = bin().args(["fermat", "4"]).env(detsurf::cli::MODULUS_ENV, "19").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["fermat", "4", "--format", "csv"]).env(detsurf::cli::MODULUS_ENV, "41").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with(",41,true")));
}

#[test]
fn binary_out_file() {
    let dir = std::env::temp_dir().join(format!("detsurf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quartics.json");
    let out = bin().args(["quartics", "--format", "json", "--out"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v[2]["degree"], 38475);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_is_deterministic() {
    let run = || bin().args(["oracle", "4", "--seed", "3", "--format", "json"]).output().unwrap();
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
