//! Bundled data assets and the directory override hook.
//!
//! Assets are embedded at compile time and re-verified at load; setting
//! `HW37_ASSET_DIR` makes the loaders read `<dir>/<name>` instead, so a
//! freshly searched certificate can stand in for a bundled one.

use std::path::PathBuf;

use crate::error::{Error, Result};

/// Environment variable naming a directory that overrides bundled assets.
pub const ASSET_DIR_ENV: &str = "HW37_ASSET_DIR";

pub const STARTER_C7: &str = include_str!("../assets/starter_c7.json");
pub const KTS_9: &str = include_str!("../assets/kts9.json");
pub const KTS_15: &str = include_str!("../assets/kts15.json");
pub const KTS_21: &str = include_str!("../assets/kts21.json");
pub const KTS_27: &str = include_str!("../assets/kts27.json");

/// Returns the asset text, honoring the directory override. A file
/// present in the override directory replaces the embedded copy; absent
/// files fall back to it, so one replacement asset can be dropped in
/// without mirroring the whole set. An unreadable override file is a
/// loud error, never a silent fallback.
pub fn load(name: &str, embedded: &'static str) -> Result<String> {
    if let Ok(dir) = std::env::var(ASSET_DIR_ENV) {
        let path = PathBuf::from(dir).join(name);
        if path.exists() {
            return std::fs::read_to_string(&path).map_err(|e| Error::AssetCorrupt {
                name: name.to_string(),
                reason: format!("override {} unreadable: {e}", path.display()),
            });
        }
    }
    Ok(embedded.to_string())
}
