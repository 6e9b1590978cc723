#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

/// Writes a label file with `counts[i]` items of `labels[i]`, spread
/// round-robin over `topics` topics (`NA` when `topics == 0`).
pub fn label_fixture(
    dir: &Path,
    file: &str,
    labels: &[&str],
    counts: &[usize],
    topics: usize,
) -> PathBuf {
    let mut text = String::new();
    let mut n = 0usize;
    for (label, &count) in labels.iter().zip(counts) {
        for _ in 0..count {
            let topic = if topics == 0 {
                "NA".to_string()
            } else {
                format!("topic{:02}", n % topics)
            };
            text.push_str(&format!("t{n}\t{topic}\t{label}\n"));
            n += 1;
        }
    }
    let path = dir.join(file);
    std::fs::write(&path, text).unwrap();
    path
}

pub fn sentiscore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sentiscore"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs the binary, expects success and parses stdout as JSON.
pub fn json_run(args: &[&str]) -> serde_json::Value {
    let out = sentiscore(args);
    assert!(
        out.status.success(),
        "sentiscore {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

/// Display value of `metric` in the `metrics` or `pooled` block.
pub fn display(report: &serde_json::Value, block: &str, metric: &str) -> f64 {
    report[block][metric]["display"]
        .as_f64()
        .unwrap_or_else(|| panic!("no {block}.{metric} in {report}"))
}
