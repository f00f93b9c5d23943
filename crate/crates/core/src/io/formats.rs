//! JSON documents for instances, packings and placement sequences.
//!
//! Numbers are written as strings (`"0.1"`, `"2"`, `"1/3"`) and read back
//! exactly; bare JSON integers are accepted on input. Output is canonical:
//! keys in sorted order, placements by id, two-space indentation and a
//! trailing newline. Packings and sequences carry the SHA-256 of their
//! instance's canonical form so they cannot be checked against the wrong
//! instance.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::geometry::{Dims, Instance, Orientation, Packing, RectId};
use crate::scalar::Scalar;
use crate::sequencing::{PlacementAction, PlacementSequence};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {path}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        path: String,
        message: String,
    },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
    #[error("{path}: duplicate rectangle id {id}")]
    DuplicateId { path: String, id: u64 },
    #[error("rectangle ids must be exactly 1..={n}; {id} is out of range")]
    IdOutOfRange { id: u64, n: usize },
    #[error("document belongs to instance {found}, not {expected}")]
    HashMismatch { expected: String, found: String },
    #[error(transparent)]
    Geometry(#[from] Error),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DimsDoc {
    h: Scalar,
    w: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RectDoc {
    h: Scalar,
    id: u64,
    w: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    container: DimsDoc,
    rects: Vec<RectDoc>,
}

/// `v` is 0 for horizontal, 1 for vertical (width and height swapped).
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlacementDoc {
    id: u64,
    v: u8,
    x: Scalar,
    y: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PackingDoc {
    #[serde(rename = "instance-hash")]
    instance_hash: String,
    placements: Vec<PlacementDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceDoc {
    actions: Vec<PlacementDoc>,
    #[serde(rename = "instance-hash")]
    instance_hash: String,
}

fn from_json<'de, T: Deserialize<'de>>(text: &'de str) -> Result<T, FormatError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let parsed = serde_path_to_error::deserialize(de);
    match parsed {
        Ok(doc) => Ok(doc),
        Err(err) => {
            let path = err.path().to_string();
            let inner = err.into_inner();
            Err(FormatError::Syntax {
                line: inner.line(),
                column: inner.column(),
                path,
                message: inner.to_string(),
            })
        }
    }
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents always serialize");
    text.push('\n');
    text
}

fn dims_at(w: Scalar, h: Scalar, path: &str) -> Result<Dims, FormatError> {
    Dims::new(w, h).map_err(|e| FormatError::Field {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn orientation_at(v: u8, path: &str) -> Result<Orientation, FormatError> {
    match v {
        0 => Ok(Orientation::Horizontal),
        1 => Ok(Orientation::Vertical),
        _ => Err(FormatError::Field {
            path: path.to_string(),
            message: format!("orientation flag must be 0 or 1, got {v}"),
        }),
    }
}

fn flag(o: Orientation) -> u8 {
    match o {
        Orientation::Horizontal => 0,
        Orientation::Vertical => 1,
    }
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let doc: InstanceDoc = from_json(text)?;
    let container = dims_at(doc.container.w, doc.container.h, "container")?;
    let n = doc.rects.len();
    let mut slots: Vec<Option<Dims>> = vec![None; n];
    for (k, r) in doc.rects.into_iter().enumerate() {
        let path = format!("rects[{k}]");
        let dims = dims_at(r.w, r.h, &path)?;
        let slot = usize::try_from(r.id)
            .ok()
            .and_then(|id| id.checked_sub(1))
            .and_then(|k| slots.get_mut(k))
            .ok_or(FormatError::IdOutOfRange { id: r.id, n })?;
        if slot.is_some() {
            return Err(FormatError::DuplicateId { path, id: r.id });
        }
        *slot = Some(dims);
    }
    let rects = slots.into_iter().map(|d| d.expect("n distinct ids in 1..=n")).collect();
    Ok(Instance::new(container, rects))
}

pub fn serialize_instance(instance: &Instance) -> String {
    to_json(&InstanceDoc {
        container: DimsDoc {
            h: instance.container().h().clone(),
            w: instance.container().w().clone(),
        },
        rects: instance
            .ids()
            .zip(instance.rects())
            .map(|(id, d)| RectDoc {
                h: d.h().clone(),
                id: id.0 as u64,
                w: d.w().clone(),
            })
            .collect(),
    })
}

/// Hex SHA-256 of the canonical instance document.
pub fn instance_hash(instance: &Instance) -> String {
    hex::encode(Sha256::digest(serialize_instance(instance).as_bytes()))
}

fn check_hash(found: String, instance: &Instance) -> Result<(), FormatError> {
    let expected = instance_hash(instance);
    if found != expected {
        return Err(FormatError::HashMismatch { expected, found });
    }
    Ok(())
}

fn parse_entries(entries: Vec<PlacementDoc>, field: &str) -> Result<Vec<PlacementAction>, FormatError> {
    let mut seen = BTreeSet::new();
    entries
        .into_iter()
        .enumerate()
        .map(|(k, e)| {
            let path = format!("{field}[{k}]");
            if !seen.insert(e.id) {
                return Err(FormatError::DuplicateId { path, id: e.id });
            }
            Ok(PlacementAction {
                id: RectId(usize::try_from(e.id).unwrap_or(usize::MAX)),
                orientation: orientation_at(e.v, &path)?,
                x: e.x,
                y: e.y,
            })
        })
        .collect()
}

pub fn parse_packing(text: &str, instance: &Arc<Instance>) -> Result<Packing, FormatError> {
    let doc: PackingDoc = from_json(text)?;
    check_hash(doc.instance_hash, instance)?;
    let entries = parse_entries(doc.placements, "placements")?;
    Ok(Packing::from_placements(
        instance.clone(),
        entries.into_iter().map(|a| (a.id, a.placement())),
    )?)
}

pub fn serialize_packing(p: &Packing) -> String {
    to_json(&PackingDoc {
        instance_hash: instance_hash(p.instance()),
        placements: p
            .rects()
            .iter()
            .map(|r| PlacementDoc {
                id: r.id().0 as u64,
                v: flag(r.orientation()),
                x: r.left().clone(),
                y: r.bottom().clone(),
            })
            .collect(),
    })
}

pub fn parse_sequence(text: &str, instance: &Instance) -> Result<PlacementSequence, FormatError> {
    let doc: SequenceDoc = from_json(text)?;
    check_hash(doc.instance_hash, instance)?;
    let actions = parse_entries(doc.actions, "actions")?;
    Ok(PlacementSequence { actions })
}

pub fn serialize_sequence(seq: &PlacementSequence, instance: &Instance) -> String {
    to_json(&SequenceDoc {
        actions: seq
            .actions
            .iter()
            .map(|a| PlacementDoc {
                id: a.id.0 as u64,
                v: flag(a.orientation),
                x: a.x.clone(),
                y: a.y.clone(),
            })
            .collect(),
        instance_hash: instance_hash(instance),
    })
}
