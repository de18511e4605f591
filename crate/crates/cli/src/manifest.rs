//! Flat `key=value` manifest written next to command outputs.

use std::fmt::Display;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub struct Manifest {
    command: &'static str,
    entries: Vec<(String, String)>,
    outputs: Vec<PathBuf>,
    started: Instant,
}

impl Manifest {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            entries: Vec::new(),
            outputs: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries
            .push((format!("param.{key}"), value.to_string()));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries
            .push((format!("result.{key}"), value.to_string()));
        self
    }

    pub fn output(&mut self, path: &Path) -> &mut Self {
        self.outputs.push(path.to_path_buf());
        self
    }

    pub fn render(&self) -> String {
        let mut s = format!("command={}\n", self.command);
        for (k, v) in &self.entries {
            s.push_str(&format!("{k}={}\n", v.replace('\n', " ")));
        }
        for (i, p) in self.outputs.iter().enumerate() {
            s.push_str(&format!("output.{}={}\n", i + 1, p.display()));
        }
        s.push_str(&format!(
            "elapsed_seconds={:.3}\n",
            self.started.elapsed().as_secs_f64()
        ));
        s
    }

    /// Writes `<primary>.manifest`.
    pub fn write_beside(&self, primary: &Path) -> io::Result<PathBuf> {
        let mut name = primary.as_os_str().to_owned();
        name.push(".manifest");
        let path = PathBuf::from(name);
        fs::write(&path, self.render())?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_layout() {
        let mut m = Manifest::new("gen");
        m.param("count", 3)
            .output(Path::new("t.txt"))
            .result("first", "0.1");
        let text = m.render();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "command=gen");
        assert_eq!(lines[1], "param.count=3");
        assert_eq!(lines[2], "result.first=0.1");
        assert_eq!(lines[3], "output.1=t.txt");
        assert!(lines[4].starts_with("elapsed_seconds="));
    }
}
