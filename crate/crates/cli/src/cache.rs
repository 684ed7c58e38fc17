//! On-disk memo of symbolic factorial functions.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use excited::factorial::FactorialCache;
use excited::polyalg::parse_polynomial;
use excited::shapes::Shape;
use excited::weyl::SchubertContext;

use crate::output::SCHEMA;

fn file_name(ctx: &SchubertContext, lambda: &Shape) -> String {
    let label: String = ctx
        .label()
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    let parts: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
    let shape = if parts.is_empty() {
        "empty".to_string()
    } else {
        parts.join("-")
    };
    format!("{label}__{shape}.json")
}

pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: &Path) -> std::io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(DiskCache { dir: dir.to_path_buf() })
    }

    /// Loads a stored entry into `memo`. Unreadable or mismatched files are
    /// ignored and will be recomputed.
    pub fn load(&self, memo: &FactorialCache, ctx: &SchubertContext, lambda: &Shape) {
        if memo.get(ctx, lambda).is_some() {
            return;
        }
        let Ok(raw) = fs::read_to_string(self.dir.join(file_name(ctx, lambda))) else {
            return;
        };
        let Ok(doc) = serde_json::from_str::<Value>(&raw) else {
            return;
        };
        if doc["schema"] != json!(SCHEMA)
            || doc["context"] != json!(ctx.label())
            || doc["shape"] != json!(lambda.parts())
        {
            return;
        }
        if let Some(Ok(p)) = doc["polynomial"].as_str().map(parse_polynomial) {
            memo.insert(ctx, lambda, p);
        }
    }

    pub fn store(&self, memo: &FactorialCache) -> std::io::Result<()> {
        for (ctx, lambda, p) in memo.entries() {
            let path = self.dir.join(file_name(&ctx, &lambda));
            if path.exists() {
                continue;
            }
            let doc = json!({
                "schema": SCHEMA,
                "context": ctx.label(),
                "shape": lambda.parts(),
                "polynomial": p.to_string(),
            });
            fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
        }
        Ok(())
    }
}
