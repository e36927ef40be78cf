//! On-disk persistence of completed rule sets.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use super::groebner::Rule;
use super::{Alphabet, Context, Letter};
use crate::error::{Error, Result};
use crate::scalars::{parse_rational, ParamSet, Rational};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "BMWF_CACHE";

/// Whether a context came from disk or was computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
    Disabled,
}

/// `$BMWF_CACHE` if set, else `fallback`.
pub fn resolve_dir(fallback: Option<&Path>) -> Option<PathBuf> {
    match std::env::var_os(CACHE_ENV) {
        Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
        _ => fallback.map(Path::to_path_buf),
    }
}

fn slug(r: &Rational) -> String {
    r.to_string().replace('/', "_").replace('-', "m")
}

pub fn cache_file(dir: &Path, n: usize, params: &ParamSet) -> PathBuf {
    dir.join(format!(
        "bmw-n{n}-q{}-nu{}-v{FORMAT_VERSION}.json",
        slug(&params.q),
        slug(&params.nu)
    ))
}

fn word_json(alpha: &Alphabet, w: &[u8]) -> Value {
    Value::Array(alpha.letters(w).iter().map(|l| Value::String(l.to_string())).collect())
}

fn rules_json(ctx: &Context<Rational>) -> Value {
    let alpha = ctx.alphabet();
    let p = ctx.params();
    let rules: Vec<Value> = ctx
        .rules()
        .iter()
        .map(|r| {
            let tail: Vec<Value> = r
                .tail
                .iter()
                .map(|(w, c)| json!({"word": word_json(alpha, w), "coeff": c.to_string()}))
                .collect();
            json!({"lead": word_json(alpha, &r.lead), "tail": tail})
        })
        .collect();
    json!({
        "format": FORMAT_VERSION,
        "n": ctx.n(),
        "q": p.q.to_string(),
        "nu": p.nu.to_string(),
        "rules": rules,
    })
}

fn parse_word(alpha: &Alphabet, v: &Value) -> Result<Vec<u8>> {
    v.as_array()
        .ok_or_else(|| Error::Cache("word is not an array".into()))?
        .iter()
        .map(|l| {
            let s = l.as_str().ok_or_else(|| Error::Cache("letter is not a string".into()))?;
            alpha.code(Letter::parse(s)?)
        })
        .collect()
}

fn parse_rules(n: usize, params: &ParamSet, v: &Value) -> Result<Vec<Rule<Rational>>> {
    let bad = |m: &str| Error::Cache(m.to_string());
    if v["format"].as_u64() != Some(FORMAT_VERSION as u64) {
        return Err(bad("format version mismatch"));
    }
    if v["n"].as_u64() != Some(n as u64)
        || v["q"].as_str() != Some(&params.q.to_string())
        || v["nu"].as_str() != Some(&params.nu.to_string())
    {
        return Err(bad("header does not match the requested algebra"));
    }
    let alpha = Alphabet::new(n);
    v["rules"]
        .as_array()
        .ok_or_else(|| bad("missing rules"))?
        .iter()
        .map(|r| {
            let lead = parse_word(&alpha, &r["lead"])?;
            let tail = r["tail"]
                .as_array()
                .ok_or_else(|| bad("missing tail"))?
                .iter()
                .map(|t| {
                    let c = parse_rational(t["coeff"].as_str().ok_or_else(|| bad("coeff"))?)?;
                    Ok((parse_word(&alpha, &t["word"])?, c))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Rule { lead, tail })
        })
        .collect()
}

/// Writes `contents` to `path` through a temporary file and a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::Cache(e.to_string()))?;
    tmp.write_all(contents).map_err(|e| Error::Cache(e.to_string()))?;
    tmp.persist(path).map_err(|e| Error::Cache(e.to_string()))?;
    Ok(())
}

/// Loads the rule set for `(n, params)` from `dir` if present and valid,
/// otherwise completes it and stores it.  Unreadable cache files are
/// recomputed and overwritten.
pub fn load_or_build(
    n: usize,
    params: &ParamSet,
    dir: Option<&Path>,
) -> Result<(Context<Rational>, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((Context::build(n, params)?, CacheStatus::Disabled));
    };
    let path = cache_file(dir, n, params);
    if let Ok(text) = fs::read_to_string(&path) {
        let loaded = serde_json::from_str::<Value>(&text)
            .map_err(|e| Error::Cache(e.to_string()))
            .and_then(|v| parse_rules(n, params, &v))
            .and_then(|rules| Context::from_rules(n, params, rules));
        if let Ok(ctx) = loaded {
            return Ok((ctx, CacheStatus::Hit));
        }
    }
    let ctx = Context::build(n, params)?;
    let text = serde_json::to_string(&rules_json(&ctx)).map_err(|e| Error::Cache(e.to_string()))?;
    write_atomic(&path, text.as_bytes())?;
    Ok((ctx, CacheStatus::Miss))
}

/// Cache files in `dir` with their sizes.
pub fn list(dir: &Path) -> Result<Vec<(PathBuf, u64)>> {
    let mut out = Vec::new();
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(Error::Cache(e.to_string())),
    };
    for entry in entries {
        let entry = entry.map_err(|e| Error::Cache(e.to_string()))?;
        let name = entry.file_name().to_string_lossy().to_string();
        if name.starts_with("bmw-n") && name.ends_with(".json") {
            let size = entry.metadata().map(|m| m.len()).unwrap_or(0);
            out.push((entry.path(), size));
        }
    }
    out.sort();
    Ok(out)
}

/// Removes all cache files in `dir`; returns how many were removed.
pub fn clear(dir: &Path) -> Result<usize> {
    let files = list(dir)?;
    for (p, _) in &files {
        fs::remove_file(p).map_err(|e| Error::Cache(e.to_string()))?;
    }
    Ok(files.len())
}
