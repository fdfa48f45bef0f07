//! The image-of-J data file.

use std::path::Path;

use fd_core::hurewicz::{ImJEntry, ImJTable};
use serde::Deserialize;

/// The bundled table.
pub const DEFAULT_TABLE: &str = include_str!("../data/imj_table.json");

#[derive(Deserialize)]
struct TableFile {
    version: u32,
    entries: Vec<EntryFile>,
}

#[derive(Deserialize)]
struct EntryFile {
    degree: u32,
    in_image_of_j: bool,
    hurewicz_nonzero: bool,
}

pub fn parse_table(text: &str) -> Result<ImJTable, String> {
    let file: TableFile = serde_json::from_str(text).map_err(|e| format!("ImJ table: {e}"))?;
    if file.version != 1 {
        return Err(format!("ImJ table: unsupported version {}", file.version));
    }
    let entries = file
        .entries
        .into_iter()
        .map(|e| (e.degree, ImJEntry { in_image: e.in_image_of_j, hurewicz_nonzero: e.hurewicz_nonzero }));
    ImJTable::from_entries(entries).map_err(|e| e.to_string())
}

pub fn load_table(path: Option<&Path>) -> Result<ImJTable, String> {
    match path {
        None => parse_table(DEFAULT_TABLE),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            parse_table(&text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_is_standard() {
        assert_eq!(load_table(None).unwrap(), ImJTable::standard(32));
    }
}
