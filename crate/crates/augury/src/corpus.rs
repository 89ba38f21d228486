//! Corpus and ontology loading plus artifact persistence.
//!
//! Papers arrive as JSON Lines, the ontology as a `subject,predicate,object`
//! CSV. Every intermediate pipeline product round-trips through a
//! self-describing JSON envelope with a checksum.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use petgraph::unionfind::UnionFind;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::{Error, Result, TopicId};

pub const DEFAULT_YEAR_RANGE: (i32, i32) = (1950, 2030);

/// One publication's metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaperRecord {
    pub id: String,
    pub year: i32,
    /// Normalized keywords, deduplicated, first occurrence order kept.
    pub keywords: Vec<String>,
    pub authors: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub citations_by_year: BTreeMap<i32, u32>,
}

#[derive(Debug, Clone, Copy)]
pub struct LoadOptions {
    /// Fail on the first malformed line instead of dropping it with a warning.
    pub strict: bool,
    pub case_fold: bool,
    pub year_range: (i32, i32),
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            strict: false,
            case_fold: true,
            year_range: DEFAULT_YEAR_RANGE,
        }
    }
}

/// A loaded value together with the warnings produced while loading it.
#[derive(Debug)]
pub struct LoadReport<T> {
    pub value: T,
    pub warnings: Vec<String>,
}

/// Trim, collapse internal whitespace, and optionally case-fold a label.
pub fn normalize_label(raw: &str, case_fold: bool) -> String {
    let collapsed = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    if case_fold {
        collapsed.to_lowercase()
    } else {
        collapsed
    }
}

#[derive(Deserialize)]
struct RawPaper {
    id: Option<String>,
    year: Option<i32>,
    keywords: Option<Vec<String>>,
    authors: Option<Vec<String>>,
    #[serde(default)]
    citations_by_year: BTreeMap<i32, u32>,
}

fn validate_paper(raw: RawPaper, options: &LoadOptions) -> std::result::Result<PaperRecord, String> {
    let id = raw.id.filter(|s| !s.is_empty()).ok_or("missing id")?;
    let year = raw.year.ok_or("missing year")?;
    let keywords = raw.keywords.ok_or("missing keywords")?;
    let authors = raw.authors.ok_or("missing authors")?;
    let mut seen = HashSet::new();
    let mut normalized = Vec::new();
    for k in &keywords {
        let n = normalize_label(k, options.case_fold);
        if !n.is_empty() && seen.insert(n.clone()) {
            normalized.push(n);
        }
    }
    if normalized.is_empty() {
        return Err("no keywords left after normalization".into());
    }
    Ok(PaperRecord {
        id,
        year,
        keywords: normalized,
        authors,
        citations_by_year: raw.citations_by_year,
    })
}

/// Load a JSON Lines corpus. Records outside the configured year range are
/// dropped with a warning; malformed lines are errors in strict mode and
/// warnings otherwise. Record order is preserved.
pub fn load_papers(path: &Path, options: &LoadOptions) -> Result<LoadReport<Vec<PaperRecord>>> {
    let file = fs::File::open(path).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })?;
    let mut records = Vec::new();
    let mut warnings = Vec::new();
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|cause| Error::Io {
            path: path.display().to_string(),
            cause,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<RawPaper>(&line)
            .map_err(|e| e.to_string())
            .and_then(|raw| validate_paper(raw, options));
        match parsed {
            Ok(record) => {
                let (lo, hi) = options.year_range;
                if record.year < lo || record.year > hi {
                    warnings.push(format!(
                        "line {line_no}: year {} outside {lo}..={hi}, record dropped",
                        record.year
                    ));
                } else {
                    records.push(record);
                }
            }
            Err(message) => {
                if options.strict {
                    return Err(Error::Parse {
                        path: path.display().to_string(),
                        line: line_no,
                        message,
                    });
                }
                warnings.push(format!("line {line_no}: {message}, record dropped"));
            }
        }
    }
    Ok(LoadReport {
        value: records,
        warnings,
    })
}

/// Write records as JSON Lines, one object per line.
pub fn write_papers_jsonl(records: &[PaperRecord], path: &Path) -> Result<()> {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(record).expect("record serializes"));
        out.push('\n');
    }
    fs::write(path, out).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })
}

/// Canonical topic vocabulary built from equivalence classes and super-area
/// edges. The canonical id of a class is its lexicographically smallest label.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Ontology {
    /// Normalized label to canonical topic id.
    pub canonical: BTreeMap<String, TopicId>,
    pub topics: BTreeSet<TopicId>,
    /// Canonical topic to its canonical super-areas.
    pub broader: BTreeMap<TopicId, BTreeSet<TopicId>>,
    /// Canonical topic to every label of its equivalence class, itself included.
    pub class_members: BTreeMap<TopicId, BTreeSet<String>>,
}

impl Ontology {
    pub fn canonical_of(&self, label: &str) -> Option<&TopicId> {
        self.canonical.get(label)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.canonical.contains_key(label)
    }

    /// Other labels of the label's equivalence class.
    pub fn same_as(&self, label: &str) -> BTreeSet<String> {
        let Some(canon) = self.canonical_of(label) else {
            return BTreeSet::new();
        };
        self.class_members
            .get(canon)
            .map(|members| members.iter().filter(|m| *m != label).cloned().collect())
            .unwrap_or_default()
    }

    /// Super-areas reachable in at most `depth` broader steps, cycle safe.
    /// The starting topic itself is never included.
    pub fn super_areas(&self, label: &str, depth: usize) -> BTreeSet<TopicId> {
        let Some(canon) = self.canonical_of(label) else {
            return BTreeSet::new();
        };
        let mut found = BTreeSet::new();
        let mut frontier: BTreeSet<&TopicId> = [canon].into_iter().collect();
        for _ in 0..depth {
            let mut next = BTreeSet::new();
            for t in frontier {
                if let Some(parents) = self.broader.get(t) {
                    for parent in parents {
                        if parent != canon && found.insert(parent.clone()) {
                            next.insert(parent);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        found
    }
}

pub const PRED_EQUIVALENT: &str = "relatedEquivalent";
pub const PRED_BROADER: &str = "broaderGeneric";
pub const PRED_CONTRIBUTES: &str = "contributesTo";

/// Load the ontology CSV. Equivalence classes are the connected components
/// of relatedEquivalent edges; broader edges are rewritten onto canonical
/// ids. A broader edge that closes onto its own class is rejected.
pub fn load_ontology(path: &Path, options: &LoadOptions) -> Result<LoadReport<Ontology>> {
    let file = fs::File::open(path).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })?;
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(file);
    let headers = reader.headers().map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 1,
        message: e.to_string(),
    })?;
    let col = |name: &str| headers.iter().position(|h| h == name);
    let (Some(c_sub), Some(c_pred), Some(c_obj)) =
        (col("subject"), col("predicate"), col("object"))
    else {
        return Err(Error::Parse {
            path: path.display().to_string(),
            line: 1,
            message: "header must contain subject, predicate, object".into(),
        });
    };

    let mut warnings = Vec::new();
    let mut equiv_edges: Vec<(String, String)> = Vec::new();
    let mut broader_edges: Vec<(String, String)> = Vec::new();
    for (idx, row) in reader.records().enumerate() {
        let line_no = idx + 2;
        let row = row.map_err(|e| Error::Parse {
            path: path.display().to_string(),
            line: line_no,
            message: e.to_string(),
        })?;
        let field = |c: usize| row.get(c).unwrap_or("");
        let subject = normalize_label(field(c_sub), options.case_fold);
        let predicate = field(c_pred).trim().to_string();
        let object = normalize_label(field(c_obj), options.case_fold);
        if subject.is_empty() || object.is_empty() {
            warnings.push(format!("line {line_no}: blank subject or object, row skipped"));
            continue;
        }
        match predicate.as_str() {
            PRED_EQUIVALENT => equiv_edges.push((subject, object)),
            PRED_BROADER => {
                if subject == object {
                    return Err(Error::OntologySelfLoop { label: subject });
                }
                broader_edges.push((subject, object));
            }
            PRED_CONTRIBUTES => {}
            other => {
                warnings.push(format!("line {line_no}: unknown predicate {other}, row skipped"));
            }
        }
    }

    // Index every topic-bearing label in sorted order so the smallest index
    // of a class is also its lexicographically smallest label.
    let mut labels: BTreeSet<&String> = BTreeSet::new();
    for (a, b) in equiv_edges.iter().chain(broader_edges.iter()) {
        labels.insert(a);
        labels.insert(b);
    }
    let labels: Vec<&String> = labels.into_iter().collect();
    let index: BTreeMap<&String, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();

    let mut uf: UnionFind<usize> = UnionFind::new(labels.len());
    for (a, b) in &equiv_edges {
        uf.union(index[a], index[b]);
    }

    let mut class_min: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..labels.len() {
        let root = uf.find(i);
        let entry = class_min.entry(root).or_insert(i);
        *entry = (*entry).min(i);
    }

    let mut ontology = Ontology::default();
    for (i, label) in labels.iter().enumerate() {
        let canon = labels[class_min[&uf.find(i)]].clone();
        ontology
            .class_members
            .entry(canon.clone())
            .or_default()
            .insert((*label).clone());
        ontology.topics.insert(canon.clone());
        ontology.canonical.insert((*label).clone(), canon);
    }
    for (sub, obj) in &broader_edges {
        let cs = ontology.canonical[sub].clone();
        let co = ontology.canonical[obj].clone();
        if cs == co {
            return Err(Error::OntologySelfLoop { label: cs });
        }
        ontology.broader.entry(cs).or_default().insert(co);
    }

    if let Some(label) = find_broader_cycle(&ontology.broader) {
        warnings.push(format!(
            "broader graph contains a cycle through {label}; edges kept, traversals are depth-guarded"
        ));
    }

    Ok(LoadReport {
        value: ontology,
        warnings,
    })
}

fn find_broader_cycle(broader: &BTreeMap<TopicId, BTreeSet<TopicId>>) -> Option<TopicId> {
    // Colors: 0 unvisited, 1 on stack, 2 done.
    let mut color: BTreeMap<&TopicId, u8> = BTreeMap::new();
    for start in broader.keys() {
        if color.get(start).copied().unwrap_or(0) != 0 {
            continue;
        }
        let mut stack = vec![(start, false)];
        while let Some((node, expanded)) = stack.pop() {
            if expanded {
                color.insert(node, 2);
                continue;
            }
            match color.get(node).copied().unwrap_or(0) {
                1 => return Some(node.clone()),
                2 => continue,
                _ => {}
            }
            color.insert(node, 1);
            stack.push((node, true));
            if let Some(parents) = broader.get(node) {
                for parent in parents {
                    match color.get(parent).copied().unwrap_or(0) {
                        1 => return Some(parent.clone()),
                        0 => stack.push((parent, false)),
                        _ => {}
                    }
                }
            }
        }
    }
    None
}

/// A pipeline product that persists inside the JSON artifact envelope.
pub trait Artifact: Serialize + DeserializeOwned {
    const KIND: &'static str;
    const VERSION: u32 = 1;
}

#[derive(Serialize)]
struct EnvelopeOut<'a> {
    kind: &'static str,
    version: u32,
    checksum: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    config: Option<&'a serde_json::Value>,
    payload: &'a serde_json::value::RawValue,
}

#[derive(Deserialize)]
struct EnvelopeIn<'a> {
    kind: String,
    version: u32,
    checksum: String,
    #[serde(default)]
    #[allow(dead_code)]
    config: Option<serde_json::Value>,
    #[serde(borrow)]
    payload: &'a serde_json::value::RawValue,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

/// Persist an artifact. `config` is echoed into the envelope for provenance.
pub fn save_artifact<T: Artifact>(
    value: &T,
    path: &Path,
    config: Option<&serde_json::Value>,
) -> Result<()> {
    let payload = serde_json::to_string(value).expect("artifact serializes");
    let checksum = sha256_hex(payload.as_bytes());
    let raw = serde_json::value::RawValue::from_string(payload).expect("payload is valid json");
    let envelope = EnvelopeOut {
        kind: T::KIND,
        version: T::VERSION,
        checksum,
        config,
        payload: &raw,
    };
    let mut text = serde_json::to_string(&envelope).expect("envelope serializes");
    text.push('\n');
    let mut file = fs::File::create(path).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })?;
    file.write_all(text.as_bytes()).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })
}

/// Load an artifact, verifying kind, version, and payload checksum.
pub fn load_artifact<T: Artifact>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })?;
    let envelope: EnvelopeIn = serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 1,
        message: format!("malformed artifact: {e}"),
    })?;
    if envelope.kind != T::KIND {
        return Err(Error::ArtifactKind {
            expected: T::KIND.into(),
            found: envelope.kind,
        });
    }
    if envelope.version != T::VERSION {
        return Err(Error::ArtifactVersion {
            kind: T::KIND.into(),
            expected: T::VERSION,
            found: envelope.version,
        });
    }
    let payload = envelope.payload.get();
    if sha256_hex(payload.as_bytes()) != envelope.checksum {
        return Err(Error::ArtifactChecksum {
            path: path.display().to_string(),
        });
    }
    serde_json::from_str(payload).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 1,
        message: format!("payload does not match {}: {e}", T::KIND),
    })
}
