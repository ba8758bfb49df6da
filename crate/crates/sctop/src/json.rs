//! JSON interchange for spaces, families, maps and completions.
//!
//! Spaces carry their open sets and the full specialization order. Decoding
//! validates everything and reports the offending location as a JSON pointer.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_path_to_error::Segment;

use sctop_core::completion::{CompletionWitnesses, GammaSi};
use sctop_core::error::Error as CoreError;
use sctop_core::subset::MAX_POINTS;
use sctop_core::{CompletionResult, FinSpace, SpaceMap, Subset, SubsetFamily};

use crate::dsl::{NamedMap, NamedSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{pointer}: {message}")]
pub struct SchemaError {
    /// JSON pointer to the offending value; empty for the document root.
    pub pointer: String,
    pub message: String,
}

fn schema(pointer: impl Into<String>, message: impl Into<String>) -> SchemaError {
    SchemaError { pointer: pointer.into(), message: message.into() }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub size: usize,
    pub names: Vec<String>,
    pub opens: Vec<Vec<usize>>,
    /// Every pair `[a, b]` with `a ≤ b`, reflexive pairs included.
    pub leq: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FamilyJson {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MapJson {
    pub from: SpaceJson,
    pub to: SpaceJson,
    pub table: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GammaJson {
    /// SI-closed sets of the source, as source indices.
    pub elements: Vec<Vec<usize>>,
    pub space: SpaceJson,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct WitnessesJson {
    pub eta_si_plus_continuous: bool,
    pub completion_strongly_complete: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CompletionJson {
    pub source: SpaceJson,
    pub gamma: GammaJson,
    /// Point closures, as indices into `gamma.elements`.
    pub psi: Vec<usize>,
    /// Members of the completion, as indices into `gamma.elements`.
    pub members: Vec<usize>,
    pub completion: SpaceJson,
    /// Completion point `i` is `gamma.elements[embedding[i]]`.
    pub embedding: Vec<usize>,
    pub eta: Vec<usize>,
    pub witnesses: WitnessesJson,
}

/// Deserializes `text`, reporting type errors with a JSON pointer.
pub fn from_str<T: DeserializeOwned>(text: &str) -> Result<T, SchemaError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let pointer: String = e
            .path()
            .iter()
            .map(|s| match s {
                Segment::Seq { index } => format!("/{index}"),
                Segment::Map { key } => format!("/{}", key.replace('~', "~0").replace('/', "~1")),
                Segment::Enum { variant } => format!("/{variant}"),
                Segment::Unknown => "/?".to_string(),
            })
            .collect();
        schema(pointer, e.into_inner().to_string())
    })
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn indices(s: &Subset) -> Vec<usize> {
    s.to_vec()
}

fn subset(len: usize, items: &[usize], at: &str) -> Result<Subset, SchemaError> {
    let mut s = Subset::empty(len);
    for (j, &i) in items.iter().enumerate() {
        if i >= len {
            return Err(schema(format!("{at}/{j}"), format!("index {i} out of range for {len} points")));
        }
        s.insert(i);
    }
    Ok(s)
}

// ---------------------------------------------------------------------------

pub fn space_to_json(x: &NamedSpace) -> SpaceJson {
    SpaceJson {
        size: x.space.size(),
        names: x.names.clone(),
        opens: x.space.opens().iter().map(indices).collect(),
        leq: x.space.specialization().relation().into_iter().map(|(a, b)| [a, b]).collect(),
    }
}

pub fn space_from_json(j: &SpaceJson) -> Result<NamedSpace, SchemaError> {
    space_at(j, "")
}

fn space_at(j: &SpaceJson, at: &str) -> Result<NamedSpace, SchemaError> {
    let n = j.size;
    if n > MAX_POINTS {
        return Err(schema(format!("{at}/size"), format!("at most {MAX_POINTS} points are supported")));
    }
    if j.names.len() != n {
        return Err(schema(format!("{at}/names"), format!("expected {n} names, found {}", j.names.len())));
    }
    for (i, name) in j.names.iter().enumerate() {
        if j.names[..i].contains(name) {
            return Err(schema(format!("{at}/names/{i}"), format!("duplicate name '{name}'")));
        }
    }
    let opens = j
        .opens
        .iter()
        .enumerate()
        .map(|(i, u)| subset(n, u, &format!("{at}/opens/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let space = FinSpace::from_opens(n, opens).map_err(|e| match e {
        CoreError::MissingEmptyOpen => schema(format!("{at}/opens"), "the empty set is not listed"),
        other => schema(format!("{at}/opens"), other.to_string()),
    })?;
    let mut leq: Vec<(usize, usize)> = Vec::new();
    for (i, &[a, b]) in j.leq.iter().enumerate() {
        if a >= n || b >= n {
            return Err(schema(format!("{at}/leq/{i}"), format!("pair [{a}, {b}] out of range")));
        }
        leq.push((a, b));
    }
    leq.sort_unstable();
    leq.dedup();
    if leq != space.specialization().relation() {
        return Err(schema(format!("{at}/leq"), "does not match the specialization order of the opens"));
    }
    Ok(NamedSpace { names: j.names.clone(), space })
}

pub fn family_to_json(f: &SubsetFamily) -> FamilyJson {
    FamilyJson { universe: f.universe(), sets: f.iter().map(indices).collect() }
}

pub fn family_from_json(j: &FamilyJson) -> Result<SubsetFamily, SchemaError> {
    if j.universe > MAX_POINTS {
        return Err(schema("/universe", format!("at most {MAX_POINTS} points are supported")));
    }
    let sets = j
        .sets
        .iter()
        .enumerate()
        .map(|(i, s)| subset(j.universe, s, &format!("/sets/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetFamily::new(j.universe, sets))
}

pub fn map_to_json(m: &NamedMap) -> MapJson {
    MapJson { from: space_to_json(&m.from), to: space_to_json(&m.to), table: m.map.table().to_vec() }
}

pub fn map_from_json(j: &MapJson) -> Result<NamedMap, SchemaError> {
    let from = space_at(&j.from, "/from")?;
    let to = space_at(&j.to, "/to")?;
    let map = SpaceMap::new(from.space.clone(), to.space.clone(), j.table.clone()).map_err(|e| match e {
        CoreError::IndexOutOfRange { .. } => {
            let i = j.table.iter().position(|&t| t >= to.space.size()).unwrap_or(0);
            schema(format!("/table/{i}"), e.to_string())
        }
        other => schema("/table", other.to_string()),
    })?;
    Ok(NamedMap { from, to, map })
}

/// Names for completion points: the closed sets they stand for.
pub fn label(source: &NamedSpace, c: &Subset) -> String {
    format!("{{{}}}", source.set_names(c).join(","))
}

pub fn completion_to_json(source: &NamedSpace, c: &CompletionResult) -> CompletionJson {
    let g = &c.gamma;
    let gamma_names = NamedSpace { names: g.elements.iter().map(|e| label(source, e)).collect(), space: g.space.clone() };
    let completion = NamedSpace { names: c.labels().iter().map(|e| label(source, e)).collect(), space: c.completion.clone() };
    CompletionJson {
        source: space_to_json(source),
        gamma: GammaJson { elements: g.elements.iter().map(indices).collect(), space: space_to_json(&gamma_names) },
        psi: indices(&c.psi),
        members: indices(&c.members),
        completion: space_to_json(&completion),
        embedding: c.embedding.clone(),
        eta: c.eta.table().to_vec(),
        witnesses: WitnessesJson {
            eta_si_plus_continuous: c.witnesses.eta_si_plus_continuous,
            completion_strongly_complete: c.witnesses.completion_strongly_complete,
        },
    }
}

pub fn completion_from_json(j: &CompletionJson) -> Result<(NamedSpace, CompletionResult), SchemaError> {
    let source = space_at(&j.source, "/source")?;
    let n = source.space.size();
    let elements = j
        .gamma
        .elements
        .iter()
        .enumerate()
        .map(|(i, e)| subset(n, e, &format!("/gamma/elements/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let gspace = space_at(&j.gamma.space, "/gamma/space")?.space;
    if gspace.size() != elements.len() {
        return Err(schema("/gamma/space/size", "does not match the number of elements"));
    }
    let m = elements.len();
    let psi = subset(m, &j.psi, "/psi")?;
    let members = subset(m, &j.members, "/members")?;
    let completion = space_at(&j.completion, "/completion")?.space;
    if j.embedding.len() != completion.size() {
        return Err(schema("/embedding", "one entry per completion point is required"));
    }
    if let Some(i) = j.embedding.iter().position(|&e| e >= m) {
        return Err(schema(format!("/embedding/{i}"), "index out of range"));
    }
    let eta = SpaceMap::new(source.space.clone(), completion.clone(), j.eta.clone())
        .map_err(|e| schema("/eta", e.to_string()))?;
    let result = CompletionResult {
        gamma: GammaSi { base: source.space.clone(), elements, space: gspace },
        psi,
        members,
        completion,
        embedding: j.embedding.clone(),
        eta,
        witnesses: CompletionWitnesses {
            eta_si_plus_continuous: j.witnesses.eta_si_plus_continuous,
            completion_strongly_complete: j.witnesses.completion_strongly_complete,
        },
    };
    Ok((source, result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::load_finite;
    use sctop_core::{strong_completion, DEFAULT_CAP};

    #[test]
    fn sierpinski_round_trip() {
        let x = NamedSpace::numbered(FinSpace::sierpinski());
        let text = to_string(&space_to_json(&x));
        let back = space_from_json(&from_str(&text).unwrap()).unwrap();
        assert_eq!(back, x);
        assert_eq!(to_string(&space_to_json(&back)), text);
    }

    #[test]
    fn completion_round_trip() {
        let x = load_finite("finite { elems: a, b, t; leq: a < t, b < t }").unwrap();
        let c = strong_completion(&x.space, DEFAULT_CAP).unwrap();
        let text = to_string(&completion_to_json(&x, &c));
        let (y, d) = completion_from_json(&from_str(&text).unwrap()).unwrap();
        assert_eq!((&y, &d), (&x, &c));
        assert_eq!(to_string(&completion_to_json(&y, &d)), text);
    }

    #[test]
    fn schema_errors_carry_pointers() {
        let missing_empty = r#"{"size": 1, "names": ["a"], "opens": [[0]], "leq": [[0, 0]]}"#;
        let e = space_from_json(&from_str(missing_empty).unwrap()).unwrap_err();
        assert_eq!(e.pointer, "/opens");
        let e = from_str::<SpaceJson>(r#"{"size": 1, "names": ["a"], "opens": [[], ["x"]], "leq": []}"#).unwrap_err();
        assert_eq!(e.pointer, "/opens/1/0");
        let bad_index = r#"{"size": 1, "names": ["a"], "opens": [[], [0, 3]], "leq": [[0, 0]]}"#;
        let e = space_from_json(&from_str(bad_index).unwrap()).unwrap_err();
        assert_eq!(e.pointer, "/opens/1/1");
        let e = from_str::<SpaceJson>(r#"{"size": 1, "names": ["a"], "opens": [], "leq": [], "x": 1}"#).unwrap_err();
        assert_eq!(e.pointer, "/x");
    }
}
