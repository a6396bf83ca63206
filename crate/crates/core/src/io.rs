//! Group files.
//!
//! ```json
//! {"name": "C3", "kind": "cayley", "table": [[0,1,2],[1,2,0],[2,0,1]]}
//! {"name": "S3", "kind": "perm", "degree": 3, "generators": [[1,0,2],[1,2,0]]}
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    name: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Vec<usize>>>,
}

pub fn parse_group_json(text: &str, origin: &Path) -> Result<Group> {
    let file_error = |message: String| Error::GroupFile {
        path: origin.to_path_buf(),
        message,
    };
    let file: GroupFile = serde_json::from_str(text).map_err(|e| file_error(e.to_string()))?;
    match file.kind.as_str() {
        "cayley" => {
            if file.degree.is_some() || file.generators.is_some() {
                return Err(file_error("kind \"cayley\" does not take degree or generators".into()));
            }
            let table = file
                .table
                .ok_or_else(|| file_error("kind \"cayley\" requires table".into()))?;
            Group::from_cayley_table(file.name, &table)
        }
        "perm" => {
            if file.table.is_some() {
                return Err(file_error("kind \"perm\" does not take a table".into()));
            }
            let degree = file
                .degree
                .ok_or_else(|| file_error("kind \"perm\" requires degree".into()))?;
            let generators = file
                .generators
                .ok_or_else(|| file_error("kind \"perm\" requires generators".into()))?;
            let perms = generators
                .into_iter()
                .map(|images| {
                    if images.len() != degree {
                        return Err(file_error(format!(
                            "generator {images:?} does not have degree {degree}"
                        )));
                    }
                    Permutation::new(images)
                })
                .collect::<Result<Vec<_>>>()?;
            Group::from_permutations(file.name, &perms)
        }
        other => Err(file_error(format!("unknown kind {other:?}"))),
    }
}

pub fn load_group_file(path: &Path) -> Result<Group> {
    let text = fs::read_to_string(path).map_err(|e| Error::GroupFile {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_group_json(&text, path)
}

/// Every `*.json` file in `dir`, in file-name order.
pub fn load_groups_dir(dir: &Path) -> Result<Vec<(PathBuf, Group)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Error::GroupFile {
            path: dir.to_path_buf(),
            message: e.to_string(),
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| load_group_file(&path).map(|g| (path, g)))
        .collect()
}

/// Serializes `group` as a `cayley` group file.
pub fn group_to_json(group: &Group) -> String {
    let file = GroupFile {
        name: group.name().to_string(),
        kind: "cayley".into(),
        table: Some(group.table_rows()),
        degree: None,
        generators: None,
    };
    serde_json::to_string(&file).expect("group file serializes")
}
