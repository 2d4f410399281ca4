//! CSV assembly, output destinations and atomic file writes.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use super::CliError;

/// Fixed 17-significant-digit scientific notation.
pub fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

/// The resolved configuration, written as the `#` line of every CSV.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigRecord {
    pairs: Vec<(String, String)>,
}

impl ConfigRecord {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.pairs.push((key.to_string(), value.to_string()));
        self
    }

    /// Shortest round-trip form, `1.0`, `0.9`, `1e-16`.
    pub fn push_f(&mut self, key: &str, value: f64) -> &mut Self {
        self.push(key, format!("{value:?}"))
    }

    pub fn push_list(&mut self, key: &str, values: &[f64]) -> &mut Self {
        let joined: Vec<String> = values.iter().map(|v| format!("{v:?}")).collect();
        self.push(key, joined.join(","))
    }

    pub fn line(&self) -> String {
        let body: Vec<String> = self.pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("# {}\n", body.join(" "))
    }
}

/// A CSV document built row by row, `\n` terminated.
#[derive(Debug, Clone, PartialEq)]
pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(config: &ConfigRecord, header: &[&str]) -> Self {
        let mut text = config.line();
        text.push_str(&header.join(","));
        text.push('\n');
        Self { text }
    }

    pub fn row(&mut self, cells: &[String]) {
        self.text.push_str(&cells.join(","));
        self.text.push('\n');
    }

    pub fn comment(&mut self, line: &str) {
        self.text.push_str("# ");
        self.text.push_str(line);
        self.text.push('\n');
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }
}

/// Write through a sibling temporary file and rename over the target.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Input(format!("cannot write {}: {e}", path.display()));
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let result = fs::File::create(&tmp)
        .and_then(|mut f| {
            f.write_all(contents.as_bytes())?;
            f.sync_all()
        })
        .and_then(|_| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io)
}

/// `prefix` + `suffix`, or `prefix/suffix` when `prefix` names a directory.
pub fn prefixed(prefix: &str, suffix: &str) -> PathBuf {
    let p = Path::new(prefix);
    if !prefix.is_empty() && p.is_dir() && !prefix.ends_with(std::path::MAIN_SEPARATOR) {
        p.join(suffix)
    } else {
        PathBuf::from(format!("{prefix}{suffix}"))
    }
}

/// `prefix` with a `.csv`/`.svg` extension replaced by `ext`.
pub fn with_extension(prefix: &str, ext: &str) -> PathBuf {
    let stem = prefix
        .strip_suffix(".csv")
        .or_else(|| prefix.strip_suffix(".svg"))
        .unwrap_or(prefix);
    PathBuf::from(format!("{stem}.{ext}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(fmt_f(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f(-0.1), "-1.0000000000000001e-1");
        let back: f64 = fmt_f(std::f64::consts::PI).parse().unwrap();
        assert_eq!(back, std::f64::consts::PI);
    }

    #[test]
    fn csv_layout() {
        let mut cfg = ConfigRecord::new("eval");
        cfg.push("fn", "kgamma").push_list("gamma", &[2.0, 0.5]);
        let mut csv = Csv::new(&cfg, &["x", "value"]);
        csv.row(&[fmt_f(2.0), fmt_f(1.0)]);
        assert_eq!(
            csv.as_str(),
            "# command=eval fn=kgamma gamma=2.0,0.5\nx,value\n2.0000000000000000e0,1.0000000000000000e0\n"
        );
    }

    #[test]
    fn extension_handling() {
        assert_eq!(with_extension("out/run", "csv"), PathBuf::from("out/run.csv"));
        assert_eq!(with_extension("out/run.csv", "svg"), PathBuf::from("out/run.svg"));
        assert_eq!(prefixed("", "fig1.csv"), PathBuf::from("fig1.csv"));
        assert_eq!(prefixed("a/b_", "fig1.csv"), PathBuf::from("a/b_fig1.csv"));
    }

    #[test]
    fn atomic_write_replaces_contents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("nested/out.csv");
        write_atomic(&path, "one\n").unwrap();
        write_atomic(&path, "two\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "two\n");
        assert_eq!(fs::read_dir(path.parent().unwrap()).unwrap().count(), 1);
    }
}
