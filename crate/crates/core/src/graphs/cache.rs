//! On-disk distance fields.
//!
//! Layout: `THDC`, version byte, kind byte, disk-count byte, source (u64 LE),
//! entry count (u64 LE), then one u16 LE per entry in packed-state order.

use std::fs;
use std::path::{Path, PathBuf};

use super::search::{bfs, DistanceField};
use super::state::{Kind, Located, StateCode};
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"THDC";
pub const VERSION: u8 = 1;
pub const CACHE_DIR_ENV: &str = "TWIN_HANOI_CACHE_DIR";
const HEADER_LEN: usize = 4 + 1 + 1 + 1 + 8 + 8;

pub fn encode(field: &DistanceField) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + 2 * field.dist.len());
    out.extend_from_slice(MAGIC);
    out.push(VERSION);
    out.push(field.kind.as_byte());
    out.push(field.n as u8);
    out.extend_from_slice(&field.source.0.to_le_bytes());
    out.extend_from_slice(&(field.dist.len() as u64).to_le_bytes());
    for d in &field.dist {
        out.extend_from_slice(&d.to_le_bytes());
    }
    out
}

pub fn decode(bytes: &[u8]) -> Result<DistanceField> {
    let bad = |msg: &str| Error::Cache(msg.to_string());
    if bytes.len() < HEADER_LEN || &bytes[..4] != MAGIC {
        return Err(bad("missing THDC header"));
    }
    if bytes[4] != VERSION {
        return Err(Error::Cache(format!("unsupported version {}", bytes[4])));
    }
    let kind = Kind::from_byte(bytes[5]).ok_or_else(|| bad("unknown kind byte"))?;
    let n = bytes[6] as usize;
    let source = StateCode(u64::from_le_bytes(bytes[7..15].try_into().unwrap()));
    let count = u64::from_le_bytes(bytes[15..23].try_into().unwrap());
    let located = Located::find(source, kind, n).map_err(|e| Error::Cache(e.to_string()))?;
    if count != located.space().size() {
        return Err(Error::Cache(format!("entry count {count} does not match the component size")));
    }
    let body = &bytes[HEADER_LEN..];
    if body.len() as u64 != 2 * count {
        return Err(Error::Cache(format!("expected {} payload bytes, found {}", 2 * count, body.len())));
    }
    let dist = body.chunks_exact(2).map(|c| u16::from_le_bytes([c[0], c[1]])).collect();
    Ok(DistanceField { kind, n, source, dist })
}

/// A directory of cached fields, one file per (kind, n, source).
#[derive(Clone, Debug)]
pub struct CacheDir {
    root: PathBuf,
}

impl CacheDir {
    pub fn new(root: impl Into<PathBuf>) -> CacheDir {
        CacheDir { root: root.into() }
    }

    /// The directory named by the environment, if set and nonempty.
    pub fn from_env() -> Option<CacheDir> {
        std::env::var_os(CACHE_DIR_ENV).filter(|v| !v.is_empty()).map(CacheDir::new)
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_for(&self, kind: Kind, n: usize, source: StateCode) -> PathBuf {
        self.root.join(format!("{kind}-{n}-{}.thdc", source.0))
    }

    pub fn load(&self, kind: Kind, n: usize, source: StateCode) -> Result<Option<DistanceField>> {
        let path = self.path_for(kind, n, source);
        if !path.exists() {
            return Ok(None);
        }
        let field = decode(&fs::read(&path)?)?;
        if field.kind != kind || field.n != n || field.source != source {
            return Err(Error::Cache(format!("{} holds a different field", path.display())));
        }
        Ok(Some(field))
    }

    pub fn store(&self, field: &DistanceField) -> Result<PathBuf> {
        fs::create_dir_all(&self.root)?;
        let path = self.path_for(field.kind, field.n, field.source);
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, encode(field))?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    pub fn load_or_compute(&self, source: StateCode, kind: Kind, n: usize) -> Result<DistanceField> {
        if let Some(field) = self.load(kind, n, source)? {
            return Ok(field);
        }
        let field = bfs(source, kind, n)?;
        self.store(&field)?;
        Ok(field)
    }

    /// Cache files with their sizes in bytes, sorted by name.
    pub fn entries(&self) -> Result<Vec<(String, u64)>> {
        if !self.root.exists() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for entry in fs::read_dir(&self.root)? {
            let entry = entry?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if name.ends_with(".thdc") {
                out.push((name, entry.metadata()?.len()));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes every cache file; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.entries()?;
        for (name, _) in &entries {
            fs::remove_file(self.root.join(name))?;
        }
        Ok(entries.len())
    }
}
