//! Helpers shared by the CLI test targets: running the binary, reading
//! metadata headers back out of both output formats, and verifying the
//! closure property (a file's header reproduces the file).

use std::path::Path;
use std::process::Command;

pub struct CmdResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(args: &[&str]) -> CmdResult {
    let output = Command::new(env!("CARGO_BIN_EXE_basechain"))
        .args(args)
        .output()
        .expect("spawn CLI binary");
    CmdResult {
        code: output.status.code().unwrap_or(-1),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

/// Extracts the metadata header from CSV (`# key=value` lines) or JSON
/// (the `meta` object) file text.
pub fn parse_meta(text: &str) -> Vec<(String, String)> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).expect("valid JSON output");
        value["meta"]
            .as_object()
            .expect("meta object")
            .iter()
            .map(|(k, v)| (k.clone(), v.as_str().expect("string meta").to_string()))
            .collect()
    } else {
        text.lines()
            .take_while(|line| line.starts_with("# "))
            .map(|line| {
                let (key, value) = line[2..].split_once('=').expect("key=value meta line");
                (key.to_string(), value.to_string())
            })
            .collect()
    }
}

/// Rebuilds the argv that reproduces a file from its metadata header:
/// the command name followed by every parameter as a `--key value` pair.
pub fn argv_from_meta(meta: &[(String, String)]) -> Vec<String> {
    let command = meta
        .iter()
        .find(|(k, _)| k == "command")
        .expect("command key")
        .1
        .clone();
    let mut argv = vec![command];
    for (key, value) in meta {
        if key == "command" || key == "version" {
            continue;
        }
        argv.push(format!("--{key}"));
        argv.push(value.clone());
    }
    argv
}

/// Runs a command writing to a file, rebuilds its argv from the file's
/// own header, reruns, and returns both byte buffers for comparison.
pub fn closure_roundtrip(dir: &Path, args: &[&str]) -> (Vec<u8>, Vec<u8>) {
    let first = dir.join("first.out");
    let second = dir.join("second.out");
    let mut argv: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    argv.push("--out".into());
    argv.push(first.to_str().unwrap().into());
    let run1 = run(&argv.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run1.code, 0, "first run failed: {}", run1.stderr);

    let bytes = std::fs::read(&first).expect("read first output");
    let meta = parse_meta(&String::from_utf8(bytes.clone()).expect("utf-8 output"));
    let mut rebuilt = argv_from_meta(&meta);
    rebuilt.push("--out".into());
    rebuilt.push(second.to_str().unwrap().into());
    let run2 = run(&rebuilt.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(run2.code, 0, "rebuilt run failed: {}", run2.stderr);

    (bytes, std::fs::read(&second).expect("read second output"))
}
