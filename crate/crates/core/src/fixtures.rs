//! Bundled data files for the 3×3 instance and the small demo presentations.
//!
//! Every file is embedded at compile time. Setting `COXLAB_FIXTURES` to a
//! directory makes [`Fixtures::from_env`] read same-named files from there
//! instead, falling back to the embedded copy for any file that is missing.

use std::path::{Path, PathBuf};

use crate::error::Result;

pub const ENV_VAR: &str = "COXLAB_FIXTURES";

pub const BUNDLED: &[(&str, &str)] = &[
    ("tt33.json", include_str!("../fixtures/tt33.json")),
    (
        "tt33_spanning.json",
        include_str!("../fixtures/tt33_spanning.json"),
    ),
    (
        "ax_relations.json",
        include_str!("../fixtures/ax_relations.json"),
    ),
    (
        "nonrel_pairs.json",
        include_str!("../fixtures/nonrel_pairs.json"),
    ),
    ("s4_remark.json", include_str!("../fixtures/s4_remark.json")),
    (
        "hexagon_quotient.json",
        include_str!("../fixtures/hexagon_quotient.json"),
    ),
    (
        "hexagon_affine.json",
        include_str!("../fixtures/hexagon_affine.json"),
    ),
];

#[derive(Clone, Debug, Default)]
pub struct Fixtures {
    dir: Option<PathBuf>,
}

impl Fixtures {
    pub fn embedded() -> Self {
        Fixtures { dir: None }
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        Fixtures {
            dir: Some(dir.as_ref().to_path_buf()),
        }
    }

    pub fn from_env() -> Self {
        match std::env::var_os(ENV_VAR) {
            Some(d) if !d.is_empty() => Fixtures::from_dir(d),
            _ => Fixtures::embedded(),
        }
    }

    pub fn read(&self, name: &str) -> Result<String> {
        if let Some(dir) = &self.dir {
            let path = dir.join(name);
            if path.exists() {
                return Ok(std::fs::read_to_string(path)?);
            }
        }
        bundled(name)
            .map(str::to_owned)
            .ok_or_else(|| crate::Error::Fixture(format!("no fixture named {name}")))
    }
}

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Writes every bundled file into `dir`.
pub fn export_all(dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    for (name, body) in BUNDLED {
        let p = dir.join(name);
        std::fs::write(&p, body)?;
        out.push(p);
    }
    Ok(out)
}
