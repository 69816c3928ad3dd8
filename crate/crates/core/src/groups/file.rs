//! Group files: JSON with either
//! `{"permutations": [[...], ...], "degree": n}` (one-line image lists) or
//! `{"table": [[...], ...]}` (row-major Cayley table, element 0 the identity).

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FiniteGroup, Permutation};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Permutations {
        permutations: Vec<Vec<usize>>,
        degree: usize,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
}

impl GroupFile {
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupFile::Permutations {
                permutations,
                degree,
            } => {
                let gens = permutations
                    .iter()
                    .map(|images| {
                        if images.len() != *degree {
                            return Err(Error::Parse(format!(
                                "permutation {images:?} has length {}, degree is {degree}",
                                images.len()
                            )));
                        }
                        Permutation::from_images(images)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let gens = if gens.is_empty() {
                    vec![Permutation::identity(*degree)]
                } else {
                    gens
                };
                FiniteGroup::from_permutations(&gens, cap)
            }
            GroupFile::Table { table } => FiniteGroup::from_table(table, cap),
        }
    }
}

pub fn parse_group_json(text: &str, cap: usize) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.build(cap)
}

pub fn load_group_file(path: &Path, cap: usize) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_group_json(&text, cap)
}
