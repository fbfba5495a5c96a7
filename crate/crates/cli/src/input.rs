//! JSON input files: quantales, Q-sets, maps between Q-sets and split
//! coequalizer instances. Every file carries `"schema": 1` and unknown
//! fields are rejected.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use qsets::monadicity::{Cocone, SplitInstance};
use qsets::qcat::QCategory;
use qsets::quantale::{LawvereValue, Monoid, QuantaleTables, Topology};
use qsets::{build_dstar, Elem, FiniteQuantale, Obj, Quantaloid};

pub const SCHEMA_VERSION: u32 = 1;

/// Reads `path` as `T`, reporting the JSON path and position of any error.
fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let at = e.path().to_string();
        anyhow!(
            "{}: schema error at `{at}`: {}",
            path.display(),
            e.into_inner()
        )
    })
}

fn check_schema(path: &Path, schema: u32) -> Result<()> {
    if schema != SCHEMA_VERSION {
        bail!(
            "{}: unsupported schema version {schema} (expected {SCHEMA_VERSION})",
            path.display()
        );
    }
    Ok(())
}

fn relative(base: &Path, file: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(file)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopologySpec {
    points: Vec<String>,
    opens: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidSpec {
    elements: Vec<String>,
    mul: Vec<Vec<usize>>,
    involution: Vec<usize>,
}

/// A quantale, either a builtin or explicit tables. Table entries are
/// carrier indices; names map to indices by position.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantaleSpec {
    #[serde(default)]
    schema: Option<u32>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    builtin: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    topology: Option<TopologySpec>,
    #[serde(default)]
    monoid: Option<MonoidSpec>,
    #[serde(default)]
    carrier: Option<Vec<String>>,
    #[serde(default)]
    chain: Option<bool>,
    #[serde(default)]
    order_pairs: Option<Vec<[usize; 2]>>,
    #[serde(default)]
    mul: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    unit: Option<usize>,
    #[serde(default)]
    involution: Option<Vec<usize>>,
}

/// A resolved quantale description.
pub enum QuantaleSource {
    /// Tables that may or may not satisfy the axioms.
    Tables {
        name: String,
        tables: QuantaleTables,
    },
    Lawvere,
}

impl QuantaleSource {
    /// The validated finite quantale; the Lawvere quantale is rejected.
    pub fn finite(&self) -> Result<Arc<FiniteQuantale>> {
        match self {
            QuantaleSource::Tables { name, tables } => {
                Ok(Arc::new(FiniteQuantale::new(name.clone(), tables.clone())?))
            }
            QuantaleSource::Lawvere => Err(qsets::Error::Capability(
                "this command needs a finite quantale; the Lawvere quantale cannot be enumerated"
                    .into(),
            )
            .into()),
        }
    }
}

fn require<T>(v: Option<T>, builtin: &str, field: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("builtin {builtin} needs the field `{field}`"))
}

impl QuantaleSpec {
    fn resolve(self) -> Result<QuantaleSource> {
        let explicit = self.carrier.is_some()
            || self.mul.is_some()
            || self.unit.is_some()
            || self.chain.is_some()
            || self.order_pairs.is_some()
            || self.involution.is_some();
        if let Some(b) = self.builtin.as_deref() {
            if explicit {
                bail!("builtin {b} cannot be combined with explicit tables");
            }
            let q = match b {
                "lawvere" => return Ok(QuantaleSource::Lawvere),
                "boolean2" => FiniteQuantale::boolean2(),
                "chain_lukasiewicz" => FiniteQuantale::chain_lukasiewicz(require(self.n, b, "n")?)?,
                "chain_goedel" => FiniteQuantale::chain_goedel(require(self.n, b, "n")?)?,
                "finite_frame" => {
                    let t = require(self.topology, b, "topology")?;
                    FiniteQuantale::finite_frame(&Topology {
                        points: t.points,
                        opens: t.opens,
                    })?
                }
                "powerset_of_monoid" => {
                    let m = match (self.monoid, self.n) {
                        (Some(m), _) => Monoid {
                            elements: m.elements,
                            mul: m.mul,
                            involution: m.involution,
                        },
                        (None, Some(n)) => Monoid::cyclic(n),
                        (None, None) => bail!("builtin {b} needs `monoid` or `n` (cyclic group)"),
                    };
                    FiniteQuantale::powerset_of_monoid(&m)?
                }
                other => bail!(
                    "unknown builtin {other:?}; expected boolean2, chain_lukasiewicz, chain_goedel, \
                     finite_frame, powerset_of_monoid or lawvere"
                ),
            };
            return Ok(QuantaleSource::Tables {
                name: q.name().to_string(),
                tables: q.tables(),
            });
        }
        let names = self
            .carrier
            .ok_or_else(|| anyhow!("a quantale needs `builtin` or `carrier`"))?;
        let n = names.len();
        let order = match (self.chain, self.order_pairs) {
            (Some(true), None) => QuantaleTables::chain_order(n),
            (None | Some(false), Some(pairs)) => {
                let pairs: Vec<(usize, usize)> = pairs.iter().map(|p| (p[0], p[1])).collect();
                QuantaleTables::order_from_pairs(n, &pairs)?
            }
            _ => bail!("give exactly one of `\"chain\": true` and `order_pairs`"),
        };
        let tables = QuantaleTables {
            names,
            order,
            mul: self
                .mul
                .ok_or_else(|| anyhow!("explicit tables need `mul`"))?,
            unit: self
                .unit
                .ok_or_else(|| anyhow!("explicit tables need `unit`"))?,
            involution: self.involution.unwrap_or_else(|| (0..n).collect()),
        };
        tables.check_shape()?;
        Ok(QuantaleSource::Tables {
            name: self.name.unwrap_or_else(|| "custom".into()),
            tables,
        })
    }
}

pub fn load_quantale(path: &Path) -> Result<QuantaleSource> {
    let spec: QuantaleSpec = read_json(path)?;
    match spec.schema {
        Some(v) => check_schema(path, v)?,
        None => bail!("{}: missing field `schema`", path.display()),
    }
    spec.resolve().with_context(|| path.display().to_string())
}

/// Inline quantale or a path to a quantale file, relative to the referring file.
fn quantale_ref(
    path: &Path,
    inline: Option<QuantaleSpec>,
    file: Option<String>,
) -> Result<QuantaleSource> {
    match (inline, file) {
        (Some(q), None) => q
            .resolve()
            .with_context(|| format!("{}: quantale", path.display())),
        (None, Some(f)) => load_quantale(&relative(path, &f)),
        _ => bail!(
            "{}: give exactly one of `quantale` and `quantale_file`",
            path.display()
        ),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct QsetFile {
    schema: u32,
    #[serde(default)]
    quantale: Option<QuantaleSpec>,
    #[serde(default)]
    quantale_file: Option<String>,
    elements: Vec<String>,
    alpha: Vec<Vec<String>>,
}

/// A Q-set as loaded: matrix rows in the base quantale, plus the category
/// over `D*(Q)` for finite quantales.
pub enum Qset {
    Finite {
        labels: Vec<String>,
        quantale: Arc<FiniteQuantale>,
        alpha: Vec<Vec<Elem>>,
    },
    Lawvere {
        labels: Vec<String>,
        alpha: Vec<Vec<LawvereValue>>,
    },
}

impl Qset {
    pub fn labels(&self) -> &[String] {
        match self {
            Qset::Finite { labels, .. } | Qset::Lawvere { labels, .. } => labels,
        }
    }

    /// The category over `D*(Q)`; fails when an entry lies outside its hom-set.
    pub fn category(&self) -> Result<QCategory> {
        match self {
            Qset::Finite {
                labels,
                quantale,
                alpha,
            } => {
                let k = Arc::new(build_dstar(quantale.clone())?);
                Ok(QCategory::from_qset(k, labels.clone(), alpha.concat())?)
            }
            Qset::Lawvere { .. } => Err(qsets::Error::Capability(
                "D*(Q) over the Lawvere quantale is infinite; only the Q-set axioms can be checked"
                    .into(),
            )
            .into()),
        }
    }
}

fn check_square(path: &Path, labels: &[String], rows: &[Vec<String>]) -> Result<()> {
    let n = labels.len();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        bail!("{}: alpha must be a {n}×{n} matrix", path.display());
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        bail!("{}: duplicate element label {dup:?}", path.display());
    }
    Ok(())
}

fn elem_by_name(q: &FiniteQuantale, name: &str, at: impl FnOnce() -> String) -> Result<Elem> {
    q.elem_by_name(name)
        .ok_or_else(|| anyhow!("{}: {name:?} is not an element of {}", at(), q.name()))
}

pub fn load_qset(path: &Path) -> Result<Qset> {
    let file: QsetFile = read_json(path)?;
    check_schema(path, file.schema)?;
    check_square(path, &file.elements, &file.alpha)?;
    let labels = file.elements;
    match quantale_ref(path, file.quantale, file.quantale_file)? {
        QuantaleSource::Lawvere => {
            let alpha = file
                .alpha
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| {
                            v.parse::<LawvereValue>().with_context(|| {
                                format!("{}: alpha({}, {})", path.display(), labels[i], labels[j])
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Qset::Lawvere { labels, alpha })
        }
        source => {
            let quantale = source.finite()?;
            let alpha = file
                .alpha
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| {
                            elem_by_name(&quantale, v, || {
                                format!("{}: alpha({}, {})", path.display(), labels[i], labels[j])
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Qset::Finite {
                labels,
                quantale,
                alpha,
            })
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    schema: u32,
    source: String,
    target: String,
    map: BTreeMap<String, String>,
}

/// A map between two Q-set files, as element indices.
pub struct QsetMap {
    pub source: Qset,
    pub target: Qset,
    pub map: Vec<usize>,
}

fn resolve_map(
    what: &str,
    map: &BTreeMap<String, String>,
    dom: &[String],
    cod: &[String],
) -> Result<Vec<usize>> {
    if let Some(extra) = map.keys().find(|k| !dom.contains(k)) {
        bail!("{what}: {extra:?} is not an element of the domain");
    }
    dom.iter()
        .map(|a| {
            let b = map
                .get(a)
                .ok_or_else(|| anyhow!("{what}: no value given for {a:?}"))?;
            cod.iter()
                .position(|c| c == b)
                .ok_or_else(|| anyhow!("{what}: {b:?} is not an element of the codomain"))
        })
        .collect()
}

pub fn load_map(path: &Path) -> Result<QsetMap> {
    let file: MapFile = read_json(path)?;
    check_schema(path, file.schema)?;
    let source = load_qset(&relative(path, &file.source))?;
    let target = load_qset(&relative(path, &file.target))?;
    let same = match (&source, &target) {
        (Qset::Finite { quantale: a, .. }, Qset::Finite { quantale: b, .. }) => {
            a.tables() == b.tables()
        }
        (Qset::Lawvere { .. }, Qset::Lawvere { .. }) => true,
        _ => false,
    };
    if !same {
        bail!(
            "{}: source and target are over different quantales",
            path.display()
        );
    }
    let map = resolve_map(
        &path.display().to_string(),
        &file.map,
        source.labels(),
        target.labels(),
    )?;
    Ok(QsetMap {
        source,
        target,
        map,
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategorySpec {
    elements: Vec<String>,
    #[serde(default)]
    types: Option<Vec<String>>,
    alpha: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoconeSpec {
    target: CategorySpec,
    map: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum QuantaloidChoice {
    OneObject,
    Dstar,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    schema: u32,
    #[serde(default)]
    quantale: Option<QuantaleSpec>,
    #[serde(default)]
    quantale_file: Option<String>,
    quantaloid: QuantaloidChoice,
    x: CategorySpec,
    y: CategorySpec,
    z: CategorySpec,
    f: BTreeMap<String, String>,
    g: BTreeMap<String, String>,
    h: BTreeMap<String, String>,
    s: BTreeMap<String, String>,
    t: BTreeMap<String, String>,
    #[serde(default)]
    cocones: Vec<CoconeSpec>,
}

fn build_category(
    path: &Path,
    what: &str,
    k: &Arc<Quantaloid>,
    spec: CategorySpec,
) -> Result<QCategory> {
    let ctx = format!("{}: {what}", path.display());
    check_square(Path::new(&ctx), &spec.elements, &spec.alpha)?;
    let q = k.base();
    let mut hom = Vec::new();
    for (i, row) in spec.alpha.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            hom.push(elem_by_name(q, v, || {
                format!("{ctx}: alpha({}, {})", spec.elements[i], spec.elements[j])
            })?);
        }
    }
    let cat = match spec.types {
        Some(types) => {
            if types.len() != spec.elements.len() {
                bail!("{ctx}: `types` needs one entry per element");
            }
            let objs = types
                .iter()
                .map(|t| {
                    k.object_by_name(t)
                        .ok_or_else(|| anyhow!("{ctx}: {t:?} is not an object of {}", k.name()))
                })
                .collect::<Result<Vec<Obj>>>()?;
            QCategory::new(k.clone(), spec.elements, objs, hom)
        }
        None if k.num_objects() == 1 => {
            let n = spec.elements.len();
            QCategory::new(k.clone(), spec.elements, vec![Obj::new(0); n], hom)
        }
        None => QCategory::from_qset(k.clone(), spec.elements, hom),
    }
    .with_context(|| ctx.clone())?;
    if !cat.is_valid() {
        let r = cat.validate();
        let failing: Vec<String> = r.failing().map(|c| c.check.clone()).collect();
        bail!("{ctx}: not a category ({})", failing.join(", "));
    }
    Ok(cat)
}

pub struct LoadedInstance {
    pub instance: SplitInstance,
    pub cocones: Vec<Cocone>,
}

pub fn load_instance(path: &Path) -> Result<LoadedInstance> {
    let file: InstanceFile = read_json(path)?;
    check_schema(path, file.schema)?;
    let q = quantale_ref(path, file.quantale, file.quantale_file)?.finite()?;
    let k = Arc::new(match file.quantaloid {
        QuantaloidChoice::OneObject => Quantaloid::one_object(q),
        QuantaloidChoice::Dstar => build_dstar(q)?,
    });
    let x = build_category(path, "x", &k, file.x)?;
    let y = build_category(path, "y", &k, file.y)?;
    let z = build_category(path, "z", &k, file.z)?;
    let p = path.display().to_string();
    let m = |name: &str, map: &BTreeMap<String, String>, d: &QCategory, c: &QCategory| {
        resolve_map(&format!("{p}: {name}"), map, d.labels(), c.labels())
    };
    let instance = SplitInstance {
        f: m("f", &file.f, &x, &y)?,
        g: m("g", &file.g, &x, &y)?,
        h: m("h", &file.h, &y, &z)?,
        s: m("s", &file.s, &z, &y)?,
        t: m("t", &file.t, &y, &x)?,
        x,
        y,
        z,
    };
    let cocones = file
        .cocones
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let target = build_category(path, &format!("cocones[{i}].target"), &k, c.target)?;
            let map = m(&format!("cocones[{i}].map"), &c.map, &instance.y, &target)?;
            Ok(Cocone { target, map })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LoadedInstance { instance, cocones })
}
