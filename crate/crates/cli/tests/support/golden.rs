//! Golden fixtures: `NAME.args` holds one argument per line, `NAME.json`
//! the exact stdout of `mring --json ARGS`. Set `MRING_BLESS=1` to rewrite
//! the expected files.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    expected: PathBuf,
}

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<Case> {
    let mut out: Vec<Case> = std::fs::read_dir(dir())
        .expect("golden directory exists")
        .filter_map(|e| {
            let path = e.ok()?.path();
            (path.extension()? == "args").then_some(path)
        })
        .map(|path| {
            let text = std::fs::read_to_string(&path).expect("readable args file");
            Case {
                name: path.file_stem().unwrap().to_string_lossy().into_owned(),
                args: text.lines().map(str::to_owned).collect(),
                expected: path.with_extension("json"),
            }
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Runs one case; `Err` carries a human-readable mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let output = Command::new(env!("CARGO_BIN_EXE_mring"))
        .arg("--json")
        .args(&case.args)
        .env_remove("MRING_LEVEL")
        .output()
        .map_err(|e| format!("{}: could not run mring: {e}", case.name))?;
    if !output.status.success() {
        return Err(format!(
            "{}: exit {:?}, stderr {}",
            case.name,
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    if std::env::var_os("MRING_BLESS").is_some() {
        std::fs::write(&case.expected, &output.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read(&case.expected)
        .map_err(|e| format!("{}: missing fixture: {e}", case.name))?;
    if expected != output.stdout {
        return Err(format!(
            "{}: expected {:?}, got {:?}",
            case.name,
            String::from_utf8_lossy(&expected),
            String::from_utf8_lossy(&output.stdout)
        ));
    }
    Ok(())
}
