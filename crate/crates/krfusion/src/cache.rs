//! Content-addressed result memo.
//!
//! One json file per request, named by the sha256 of the canonical request
//! text. Entries store the request text next to the result and are ignored
//! when it does not match. There is no eviction.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::render::Report;
use crate::request::{Command, Request};

#[derive(Serialize, Deserialize)]
struct Entry {
    request: String,
    result: Value,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn key(req: &Request) -> String {
        hex::encode(Sha256::digest(req.canonical().as_bytes()))
    }

    pub fn path(&self, req: &Request) -> PathBuf {
        self.dir.join(format!("{}.json", Self::key(req)))
    }

    /// Only pure lookups are memoised.
    pub fn applies_to(command: Command) -> bool {
        matches!(command, Command::Compute | Command::Table | Command::Dims)
    }

    /// `None` on a miss, an unreadable entry, or a request mismatch.
    pub fn load(&self, req: &Request) -> Option<Report> {
        let text = fs::read_to_string(self.path(req)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.request != req.canonical() {
            return None;
        }
        let report = match req.command {
            Command::Compute => Report::Compute(serde_json::from_value(entry.result).ok()?),
            Command::Table => Report::Table(serde_json::from_value(entry.result).ok()?),
            Command::Dims => Report::Dims(serde_json::from_value(entry.result).ok()?),
            Command::Verify | Command::Selfcheck => return None,
        };
        Some(report)
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn store(&self, req: &Request, report: &Report) -> io::Result<()> {
        let result = match report {
            Report::Compute(d) => serde_json::to_value(d),
            Report::Table(d) => serde_json::to_value(d),
            Report::Dims(d) => serde_json::to_value(d),
            Report::Verify(_) | Report::Selfcheck(_) => return Ok(()),
        }
        .map_err(io::Error::other)?;
        fs::create_dir_all(&self.dir)?;
        let entry = Entry { request: req.canonical(), result };
        let text = serde_json::to_string_pretty(&entry).map_err(io::Error::other)?;
        let path = self.path(req);
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)
    }
}
