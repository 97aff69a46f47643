//! Exhaustive Laplacian-cospectral search and certification that a graph is
//! determined by its Laplacian spectrum among all graphs of the same order
//! and size.

use crate::canon::{canonical_form, canonical_graph};
use crate::enumerate::{enumerate_parallel, enumerate_vec, EnumFilter, SOFT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6, Graph6Reader};
use crate::spectral::{char_poly, invariants_from_spectrum, IntPoly, SpectralInvariants};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::io::{BufRead, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// The exact characteristic-polynomial coefficient vector of `L`, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint(IntPoly<BigInt>);

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        Fingerprint(char_poly(g))
    }

    pub fn from_poly(p: IntPoly<BigInt>) -> Self {
        Fingerprint(p)
    }

    pub fn poly(&self) -> &IntPoly<BigInt> {
        &self.0
    }

    /// Decimal coefficients, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.coeffs().iter().map(|c| c.to_string()).collect()
    }

    pub fn parse(coeffs: &[String]) -> Result<Self> {
        let parsed = coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| Error::InvalidCharPoly(format!("{c:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Fingerprint(IntPoly::new(parsed)))
    }

    /// 128-bit SHA-256 prefix of the comma-joined coefficients, as hex. Only a grouping key.
    pub fn digest(&self) -> String {
        let text = self.to_strings().join(",");
        Sha256::digest(text.as_bytes())[..16].iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint[{}]", self.to_strings().join(", "))
    }
}

/// Pairwise non-isomorphic graphs sharing one Laplacian spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CospectralClass {
    pub fingerprint: Fingerprint,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
}

impl CospectralClass {
    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }

    pub fn digest(&self) -> String {
        self.fingerprint.digest()
    }

    fn to_record(&self) -> ClassRecord {
        ClassRecord { digest: self.digest(), charpoly: self.fingerprint.to_strings(), members: self.members.clone() }
    }

    fn from_record(r: ClassRecord) -> Result<Self> {
        let fingerprint = Fingerprint::parse(&r.charpoly)?;
        if fingerprint.digest() != r.digest {
            return Err(Error::Consistency(format!("digest mismatch for class {}", r.digest)));
        }
        Ok(CospectralClass { fingerprint, members: r.members })
    }
}

/// One line of a class file or class report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub digest: String,
    pub charpoly: Vec<String>,
    pub members: Vec<String>,
}

impl From<&CospectralClass> for ClassRecord {
    fn from(c: &CospectralClass) -> Self {
        c.to_record()
    }
}

/// Groups graphs by exact fingerprint after dropping isomorphic duplicates.
/// Every class is checked to agree on order, size, component count,
/// spanning-tree count and sum of squared degrees; a disagreement is an
/// internal-consistency error.
pub fn cospectral_classes(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<CospectralClass>> {
    let mut seen = HashSet::new();
    let unique: Vec<Graph> =
        graphs.into_iter().map(|g| canonical_graph(&g)).filter(|g| seen.insert(g.clone())).collect();
    group_canonical(unique)
}

/// As [`cospectral_classes`], for inputs already known to be canonical and distinct.
fn group_canonical(graphs: Vec<Graph>) -> Result<Vec<CospectralClass>> {
    let keyed: Vec<(Fingerprint, SpectralInvariants, String)> =
        graphs.par_iter().map(|g| (Fingerprint::of(g), SpectralInvariants::direct(g), to_graph6(g))).collect();
    let mut groups: BTreeMap<(String, Fingerprint), Vec<(SpectralInvariants, String)>> = BTreeMap::new();
    for (fp, inv, g6) in keyed {
        groups.entry((fp.digest(), fp)).or_default().push((inv, g6));
    }
    groups
        .into_iter()
        .map(|((_, fingerprint), members)| {
            let expected = invariants_from_spectrum(fingerprint.poly())?;
            for (inv, g6) in &members {
                if *inv != expected {
                    return Err(Error::Consistency(format!(
                        "{g6}: direct invariants {inv:?} differ from spectrum-derived {expected:?}"
                    )));
                }
            }
            let mut members: Vec<String> = members.into_iter().map(|(_, g)| g).collect();
            members.sort();
            Ok(CospectralClass { fingerprint, members })
        })
        .collect()
}

/// Flat-file store of class lists, one file per `(n, m)`:
/// `<root>/n{n}/m{m}/classes.jsonl`, one JSON class per line, sorted by digest.
#[derive(Clone, Debug)]
pub struct ClassCache {
    root: PathBuf,
}

impl ClassCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        ClassCache { root: root.into() }
    }

    pub fn path(&self, n: usize, m: usize) -> PathBuf {
        self.root.join(format!("n{n}")).join(format!("m{m}")).join("classes.jsonl")
    }

    pub fn load(&self, n: usize, m: usize) -> Result<Option<Vec<CospectralClass>>> {
        let path = self.path(n, m);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let record: ClassRecord = serde_json::from_str(line).map_err(|e| Error::Line {
                line: i + 1,
                source: Box::new(Error::Io(format!("{}: {e}", path.display()))),
            })?;
            out.push(CospectralClass::from_record(record)?);
        }
        Ok(Some(out))
    }

    pub fn store(&self, n: usize, m: usize, classes: &[CospectralClass]) -> Result<()> {
        let path = self.path(n, m);
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!("classes.jsonl.{}.tmp", std::process::id()));
        {
            let mut w = BufWriter::new(fs::File::create(&tmp)?);
            for c in classes {
                serde_json::to_writer(&mut w, &c.to_record()).map_err(|e| Error::Io(e.to_string()))?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// No non-isomorphic graph of the same order and size shares the spectrum.
    #[serde(rename = "DLS-at-scope")]
    DlsAtScope,
    #[serde(rename = "mate-found")]
    MateFound { mates: Vec<String> },
}

impl Verdict {
    pub fn is_dls(&self) -> bool {
        matches!(self, Verdict::DlsAtScope)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub target: String,
    pub canonical: String,
    pub n: usize,
    pub m: usize,
    pub graphs_examined: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Certifies graphs against exhaustive class lists, computing each `(n, m)`
/// list at most once per instance and optionally persisting it.
#[derive(Debug, Default)]
pub struct Certifier {
    cache: Option<ClassCache>,
    force: bool,
    parallel: bool,
    memo: HashMap<(usize, usize), Arc<Vec<CospectralClass>>>,
}

impl Certifier {
    pub fn new() -> Self {
        Certifier::default()
    }

    pub fn with_cache(mut self, cache: ClassCache) -> Self {
        self.cache = Some(cache);
        self
    }

    /// Allows orders above the soft enumeration guard.
    pub fn force(mut self, yes: bool) -> Self {
        self.force = yes;
        self
    }

    pub fn parallel(mut self, yes: bool) -> Self {
        self.parallel = yes;
        self
    }

    /// All cospectral classes of graphs with `n` vertices and `m` edges, connected or not.
    pub fn classes(&mut self, n: usize, m: usize) -> Result<Arc<Vec<CospectralClass>>> {
        if let Some(c) = self.memo.get(&(n, m)) {
            return Ok(c.clone());
        }
        if n > SOFT_MAX_ORDER && !self.force {
            return Err(Error::Budget { n, guard: SOFT_MAX_ORDER });
        }
        let cached = match &self.cache {
            Some(cache) => cache.load(n, m)?,
            None => None,
        };
        let classes = match cached {
            Some(c) => c,
            None => {
                let filter = EnumFilter::new(n).edges(m);
                let graphs = if self.parallel {
                    enumerate_parallel(&filter, self.force)?
                } else {
                    enumerate_vec(&filter, self.force)?
                };
                let classes = group_canonical(graphs)?;
                if let Some(cache) = &self.cache {
                    cache.store(n, m, &classes)?;
                }
                classes
            }
        };
        let classes = Arc::new(classes);
        self.memo.insert((n, m), classes.clone());
        Ok(classes)
    }

    pub fn certify(&mut self, g: &Graph) -> Result<Certificate> {
        let (n, m) = (g.order(), g.edge_count());
        let classes = self.classes(n, m)?;
        let fp = Fingerprint::of(g);
        let canonical = canonical_form(g);
        let class = classes.iter().find(|c| c.fingerprint == fp).ok_or_else(|| {
            Error::Consistency(format!("{canonical} is missing from the enumeration of n = {n}, m = {m}"))
        })?;
        if !class.members.contains(&canonical) {
            return Err(Error::Consistency(format!("{canonical} is missing from its cospectral class")));
        }
        let mates: Vec<String> = class.members.iter().filter(|s| **s != canonical).cloned().collect();
        Ok(Certificate {
            target: to_graph6(g),
            canonical,
            n,
            m,
            graphs_examined: classes.iter().map(|c| c.members.len()).sum(),
            verdict: if mates.is_empty() { Verdict::DlsAtScope } else { Verdict::MateFound { mates } },
        })
    }
}

/// One-off certification without caching.
pub fn certify_dls(g: &Graph) -> Result<Certificate> {
    Certifier::new().certify(g)
}

/// Parses graph6 lines from a reader.
pub fn ingest_graph6<R: BufRead>(reader: R, lenient: bool) -> Graph6Reader<R> {
    Graph6Reader::new(reader).lenient(lenient)
}

/// Parses graph6 lines from a file, or from standard input when `path` is `None` or `-`.
pub fn ingest_graph6_path(path: Option<&Path>, lenient: bool) -> Result<Box<dyn Iterator<Item = Result<Graph>>>> {
    match path {
        Some(p) if p != Path::new("-") => {
            let f = fs::File::open(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(Box::new(ingest_graph6(std::io::BufReader::new(f), lenient)))
        }
        _ => Ok(Box::new(ingest_graph6(std::io::stdin().lock(), lenient))),
    }
}

/// Decodes a list of graph6 strings.
pub fn parse_all(lines: &[&str]) -> Result<Vec<Graph>> {
    lines.iter().map(|l| from_graph6(l)).collect()
}
