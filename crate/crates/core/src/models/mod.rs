//! Concrete models and the identifier registry used by the command line.

pub mod formal;
pub mod omega2;
pub mod qs0;
pub mod so;

use alloc::format;

use crate::model::AlgebraModel;
use crate::{Error, Result};

pub use omega2::{bv_closed_form, bv_omega2_s2, omega2_sphere_model, BvSource, LoopModelConfig};
pub use qs0::{qs0_fragment, QS0FragmentConfig};
pub use so::{compute_primitive, so_model};

/// Builds a model from its identifier: `omega2s<m>` for `m ≥ 2`, `so(<n>)`,
/// `qs0`, `formal(<n>)` or `stable-formal`. Truncations are chosen so that
/// every basis element of degree `≤ max_degree` can be fed to `Q_1`.
pub fn by_id(id: &str, max_degree: u32) -> Result<AlgebraModel> {
    let bad = || Error::UnsupportedConfig(format!("unknown model `{id}`"));
    if let Some(rest) = id.strip_prefix("omega2s") {
        let s: u32 = rest.trim_start_matches('(').trim_end_matches(')').parse().map_err(|_| bad())?;
        if s < 2 {
            return Err(bad());
        }
        return omega2_sphere_model(&LoopModelConfig::for_degree(s - 2, max_degree));
    }
    if let Some(n) = parenthesized(id, "so") {
        let n = n.ok_or_else(bad)?;
        if n < 2 {
            return Err(bad());
        }
        return Ok(so_model(n));
    }
    if let Some(n) = parenthesized(id, "formal") {
        let n = n.ok_or_else(bad)?;
        if n < 2 {
            return Err(bad());
        }
        return Ok(formal::formal_model(n, 1));
    }
    match id {
        "qs0" => qs0_fragment(&QS0FragmentConfig { max_degree: max_degree.max(1), ..Default::default() }),
        "stable-formal" => Ok(formal::stable_formal_model(1)),
        _ => Err(bad()),
    }
}

fn parenthesized(id: &str, head: &str) -> Option<Option<u32>> {
    let rest = id.strip_prefix(head)?;
    let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
    Some(inner.parse().ok())
}
