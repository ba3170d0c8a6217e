//! Group ingestion from JSON files.
//!
//! A catalog file holds one record or an array of records. Two record
//! shapes are accepted:
//!
//! - Cayley table: `{"name": "S3", "order": 6, "table": [[0,1,...], ...]}`
//!   with 0-based element indices, row-major.
//! - Permutation generators: `{"name": "S3", "degree": 3,
//!   "generators": [[1,0,2], [1,2,0]]}` where each generator is the list of
//!   images of `0..degree`.
//!
//! Every record is fully validated on load; records whose multiplication
//! table is identical to an earlier record in the same file are dropped with
//! a warning on stderr.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use smallclass::{GroupTable, Perm};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Json { path: PathBuf, message: String },
    #[error("record {record} in {path} is not a recognized group record (need \"table\" or \"generators\"): {message}")]
    Format {
        path: PathBuf,
        record: usize,
        message: String,
    },
    #[error("record {record} ({name}) in {path}: {reason}")]
    Validation {
        path: PathBuf,
        record: usize,
        name: String,
        reason: String,
    },
    #[error("{path}: expected exactly one group record, found {found}")]
    NotSingleton { path: PathBuf, found: usize },
}

/// Which of the two record shapes a record used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordKind {
    Cayley,
    Generators,
}

impl RecordKind {
    fn describe(self) -> &'static str {
        match self {
            RecordKind::Cayley => "a Cayley-table record",
            RecordKind::Generators => "a permutation-generator record",
        }
    }
}

#[derive(Deserialize)]
struct CayleyRecord {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GeneratorRecord {
    name: String,
    degree: usize,
    generators: Vec<Vec<u16>>,
}

/// Loads every group in the file, deduplicating identical tables.
pub fn load_catalog(path: &Path, max_order: usize) -> Result<Vec<GroupTable>, CatalogError> {
    let records = load_records(path, max_order)?;
    let mut kept: Vec<(usize, GroupTable, Vec<Vec<usize>>)> = Vec::new();
    for (index, _, group) in records {
        let rows = group.cayley_rows();
        if let Some((prev_index, prev, _)) =
            kept.iter().find(|(_, _, prev_rows)| *prev_rows == rows)
        {
            eprintln!(
                "warning: {}: record {} ({}) has the same table as record {} ({}); dropped",
                path.display(),
                index,
                group.name(),
                prev_index,
                prev.name(),
            );
            continue;
        }
        kept.push((index, group, rows));
    }
    Ok(kept.into_iter().map(|(_, g, _)| g).collect())
}

/// Loads a file that must contain exactly one record of the given shape.
pub fn load_single(
    path: &Path,
    kind: RecordKind,
    max_order: usize,
) -> Result<GroupTable, CatalogError> {
    let mut records = load_records(path, max_order)?;
    if records.len() != 1 {
        return Err(CatalogError::NotSingleton {
            path: path.to_path_buf(),
            found: records.len(),
        });
    }
    let (record, found_kind, group) = records.pop().expect("length checked");
    if found_kind != kind {
        return Err(CatalogError::Validation {
            path: path.to_path_buf(),
            record,
            name: group.name().to_string(),
            reason: format!("expected {}", kind.describe()),
        });
    }
    Ok(group)
}

fn load_records(
    path: &Path,
    max_order: usize,
) -> Result<Vec<(usize, RecordKind, GroupTable)>, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| CatalogError::Json {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
    let items: Vec<serde_json::Value> = match value {
        serde_json::Value::Array(items) => items,
        other => vec![other],
    };
    items
        .into_iter()
        .enumerate()
        .map(|(record, item)| {
            let (kind, group) = build_record(path, record, item, max_order)?;
            Ok((record, kind, group))
        })
        .collect()
}

fn build_record(
    path: &Path,
    record: usize,
    item: serde_json::Value,
    max_order: usize,
) -> Result<(RecordKind, GroupTable), CatalogError> {
    let format_err = |message: String| CatalogError::Format {
        path: path.to_path_buf(),
        record,
        message,
    };
    let kind = if item.get("table").is_some() {
        RecordKind::Cayley
    } else if item.get("generators").is_some() {
        RecordKind::Generators
    } else {
        return Err(format_err("neither field present".to_string()));
    };
    let validation = |name: &str, reason: String| CatalogError::Validation {
        path: path.to_path_buf(),
        record,
        name: name.to_string(),
        reason,
    };
    match kind {
        RecordKind::Cayley => {
            let raw: CayleyRecord =
                serde_json::from_value(item).map_err(|e| format_err(e.to_string()))?;
            if raw.order != raw.table.len() {
                return Err(validation(
                    &raw.name,
                    format!(
                        "\"order\" says {} but the table has {} rows",
                        raw.order,
                        raw.table.len()
                    ),
                ));
            }
            let group = GroupTable::from_cayley(raw.name.clone(), raw.table)
                .map_err(|e| validation(&raw.name, e.to_string()))?;
            Ok((RecordKind::Cayley, group))
        }
        RecordKind::Generators => {
            let raw: GeneratorRecord =
                serde_json::from_value(item).map_err(|e| format_err(e.to_string()))?;
            let mut perms = Vec::with_capacity(raw.generators.len());
            for (i, images) in raw.generators.iter().enumerate() {
                if images.len() != raw.degree {
                    return Err(validation(
                        &raw.name,
                        format!(
                            "generator {} has {} images but \"degree\" is {}",
                            i,
                            images.len(),
                            raw.degree
                        ),
                    ));
                }
                perms.push(
                    Perm::new(images.clone())
                        .map_err(|e| validation(&raw.name, format!("generator {i}: {e}")))?,
                );
            }
            let group = GroupTable::from_generators(raw.name.clone(), &perms, max_order)
                .map_err(|e| validation(&raw.name, e.to_string()))?;
            Ok((RecordKind::Generators, group))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallclass::families::make_symmetric;
    use smallclass::{conjugacy_classes, DEFAULT_MAX_ORDER};
    use std::io::Write;

    fn write_temp(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn empty_file_is_an_empty_catalog() {
        let f = write_temp("  \n");
        assert!(load_catalog(f.path(), DEFAULT_MAX_ORDER).unwrap().is_empty());
        let f = write_temp("[]");
        assert!(load_catalog(f.path(), DEFAULT_MAX_ORDER).unwrap().is_empty());
    }

    #[test]
    fn cayley_table_round_trips() {
        let s3 = make_symmetric(3).unwrap();
        let json = serde_json::json!({
            "name": "S3-copy",
            "order": 6,
            "table": s3.cayley_rows(),
        });
        let f = write_temp(&json.to_string());
        let loaded = load_catalog(f.path(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded[0].order(), 6);
        assert_eq!(loaded[0].cayley_rows(), s3.cayley_rows());
    }

    #[test]
    fn generator_record_builds_s3() {
        let json = r#"[{"name": "S3-gens", "degree": 3, "generators": [[1,0,2],[1,2,0]]}]"#;
        let f = write_temp(json);
        let loaded = load_catalog(f.path(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded[0].order(), 6);
        assert_eq!(conjugacy_classes(&loaded[0]).sizes(), &[1, 2, 3]);
    }

    #[test]
    fn duplicate_tables_are_dropped() {
        let s3 = make_symmetric(3).unwrap();
        let one = serde_json::json!({"name": "a", "order": 6, "table": s3.cayley_rows()});
        let two = serde_json::json!({"name": "b", "order": 6, "table": s3.cayley_rows()});
        let f = write_temp(&serde_json::Value::Array(vec![one, two]).to_string());
        let loaded = load_catalog(f.path(), DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(loaded.len(), 1);
        assert_eq!(loaded[0].name(), "a");
    }

    #[test]
    fn bad_records_name_their_index() {
        // Valid first record, broken second: non-associative 5-element table.
        let s3 = make_symmetric(3).unwrap();
        let good = serde_json::json!({"name": "ok", "order": 6, "table": s3.cayley_rows()});
        let bad = serde_json::json!({
            "name": "broken",
            "order": 5,
            "table": [
                [0,1,2,3,4],
                [1,0,3,4,2],
                [2,4,0,1,3],
                [3,2,4,0,1],
                [4,3,1,2,0],
            ],
        });
        let f = write_temp(&serde_json::Value::Array(vec![good, bad]).to_string());
        match load_catalog(f.path(), DEFAULT_MAX_ORDER) {
            Err(CatalogError::Validation { record: 1, name, .. }) => assert_eq!(name, "broken"),
            other => panic!("expected a validation error for record 1, got {other:?}"),
        }
        let f = write_temp(r#"{"name": "x", "what": 3}"#);
        assert!(matches!(
            load_catalog(f.path(), DEFAULT_MAX_ORDER),
            Err(CatalogError::Format { record: 0, .. })
        ));
    }

    #[test]
    fn order_field_must_match_table() {
        let s3 = make_symmetric(3).unwrap();
        let bad = serde_json::json!({"name": "s3", "order": 7, "table": s3.cayley_rows()});
        let f = write_temp(&bad.to_string());
        match load_catalog(f.path(), DEFAULT_MAX_ORDER) {
            Err(CatalogError::Validation { reason, .. }) => {
                assert!(reason.contains("7"), "{reason}");
            }
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn single_loader_enforces_count_and_kind() {
        let s3 = make_symmetric(3).unwrap();
        let rec = serde_json::json!({"name": "s3", "order": 6, "table": s3.cayley_rows()});
        let f = write_temp(&rec.to_string());
        assert_eq!(
            load_single(f.path(), RecordKind::Cayley, DEFAULT_MAX_ORDER).unwrap().order(),
            6
        );
        assert!(matches!(
            load_single(f.path(), RecordKind::Generators, DEFAULT_MAX_ORDER),
            Err(CatalogError::Validation { .. })
        ));
        let f = write_temp(&serde_json::Value::Array(vec![rec.clone(), rec]).to_string());
        assert!(matches!(
            load_single(f.path(), RecordKind::Cayley, DEFAULT_MAX_ORDER),
            Err(CatalogError::NotSingleton { found: 2, .. })
        ));
    }
}
