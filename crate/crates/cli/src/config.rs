//! Experiment config files: flat TOML, one key per line.
//!
//! ```toml
//! name = "tree-d8-heavy"
//! generator = "tree"      # tree | path | cycle | complete | cubic | subcubic
//! depth = 8               # tree only; the others take n (and p for subcubic)
//! instance_seed = 0       # cubic and subcubic
//! kind = "paths"          # paths | hamilton
//! start = 0
//! k = 9                   # paths only
//! mode = "heavy"          # heavy | light
//! oracle = "exact"        # exact | sampling (then walks, groups, oracle_seed)
//! M = 2000
//! weight_seed = 0
//! out = "results"
//! ```

use std::collections::BTreeMap;
use std::path::PathBuf;

use heavylight::experiments::{ExperimentConfig, InstanceSpec};
use heavylight::{CountOracle, GreedyMode, RngSeed};

const KEYS: &[&str] = &[
    "name",
    "generator",
    "depth",
    "n",
    "p",
    "instance_seed",
    "kind",
    "start",
    "k",
    "mode",
    "oracle",
    "walks",
    "groups",
    "oracle_seed",
    "M",
    "weight_seed",
    "out",
];

#[derive(Debug, Clone, PartialEq)]
pub enum Campaign {
    Paths(ExperimentConfig),
    Hamilton {
        name: String,
        n: usize,
        instance_seed: u64,
        mode: GreedyMode,
        trials: usize,
        weight_seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentFile {
    pub campaign: Campaign,
    pub out: PathBuf,
    /// Every key with its resolved value, defaults included.
    pub resolved: Vec<(String, String)>,
}

struct Fields {
    values: BTreeMap<String, String>,
    errors: Vec<String>,
    resolved: Vec<(String, String)>,
}

impl Fields {
    fn raw(&mut self, key: &str, default: Option<&str>) -> Option<String> {
        let v = self.values.get(key).cloned().or_else(|| default.map(str::to_string));
        match &v {
            Some(v) => self.resolved.push((key.to_string(), v.clone())),
            None => self.errors.push(format!("missing key `{key}`")),
        }
        v
    }

    fn parse<T: std::str::FromStr>(&mut self, key: &str, default: Option<&str>) -> Option<T>
    where
        T::Err: std::fmt::Display,
    {
        let raw = self.raw(key, default)?;
        match raw.parse() {
            Ok(v) => Some(v),
            Err(e) => {
                self.errors.push(format!("`{key}`: cannot parse {raw:?}: {e}"));
                None
            }
        }
    }
}

/// Parses and validates a config; all problems are reported together.
pub fn parse_config(text: &str, default_name: &str) -> Result<ExperimentFile, Vec<String>> {
    let mut f = Fields {
        values: BTreeMap::new(),
        errors: Vec::new(),
        resolved: Vec::new(),
    };
    match text.parse::<toml::Table>() {
        Ok(table) => {
            for (key, value) in table {
                if !KEYS.contains(&key.as_str()) {
                    f.errors.push(format!("unknown key `{key}`"));
                    continue;
                }
                let value = match value {
                    toml::Value::String(s) => s,
                    toml::Value::Integer(i) => i.to_string(),
                    toml::Value::Float(x) => x.to_string(),
                    toml::Value::Boolean(b) => b.to_string(),
                    other => {
                        f.errors.push(format!("`{key}`: expected a scalar, got {}", other.type_str()));
                        continue;
                    }
                };
                f.values.insert(key, value);
            }
        }
        Err(e) => return Err(vec![e.to_string().trim_end().to_string()]),
    }

    let name = f.raw("name", Some(default_name)).unwrap_or_default();
    let kind = f.raw("kind", Some("paths")).unwrap_or_default();
    let generator = f.raw("generator", None);
    let instance = match generator.as_deref() {
        Some("tree") => f.parse("depth", None).map(|depth| InstanceSpec::Tree { depth }),
        Some("path") => f.parse("n", None).map(|n| InstanceSpec::Path { n }),
        Some("cycle") => f.parse("n", None).map(|n| InstanceSpec::Cycle { n }),
        Some("complete") => f.parse("n", None).map(|n| InstanceSpec::Complete { n }),
        Some("cubic") => {
            let n = f.parse("n", None);
            let seed = f.parse("instance_seed", Some("0"));
            n.zip(seed).map(|(n, seed)| InstanceSpec::Cubic { n, seed })
        }
        Some("subcubic") => {
            let n = f.parse("n", None);
            let p = f.parse("p", None);
            let seed = f.parse("instance_seed", Some("0"));
            match (n, p, seed) {
                (Some(n), Some(p), Some(seed)) => Some(InstanceSpec::Subcubic { n, p, seed }),
                _ => None,
            }
        }
        Some(other) => {
            f.errors.push(format!("`generator`: unknown generator {other:?}"));
            None
        }
        None => None,
    };
    let mode: Option<GreedyMode> = f.parse("mode", None);
    let trials: Option<usize> = f.parse("M", None);
    if let Some(m) = trials {
        if m < 2 {
            f.errors.push(format!("`M`: M >= 2 required, got {m}"));
        }
    }
    let weight_seed: Option<u64> = f.parse("weight_seed", Some("0"));
    let out = f.raw("out", Some("results")).map(PathBuf::from);

    let campaign = match kind.as_str() {
        "paths" => {
            let start: Option<usize> = f.parse("start", Some("0"));
            let k: Option<usize> = f.parse("k", None);
            let oracle = match f.raw("oracle", Some("exact")).as_deref() {
                Some("exact") => Some(CountOracle::Exact),
                Some("sampling") => {
                    let walks = f.parse("walks", Some("1000"));
                    let groups = f.parse("groups", Some("10"));
                    let seed: Option<u64> = f.parse("oracle_seed", Some("0"));
                    match (walks, groups, seed) {
                        (Some(walks), Some(groups), Some(seed)) => Some(CountOracle::Sampling {
                            walks,
                            groups,
                            seed: RngSeed::new(seed),
                        }),
                        _ => None,
                    }
                }
                Some(other) => {
                    f.errors.push(format!("`oracle`: expected exact or sampling, got {other:?}"));
                    None
                }
                None => None,
            };
            match (instance, start, k, mode, oracle, trials, weight_seed) {
                (Some(instance), Some(start), Some(k), Some(mode), Some(oracle), Some(trials), Some(weight_seed)) => {
                    Some(Campaign::Paths(ExperimentConfig {
                        name: name.clone(),
                        instance,
                        start,
                        k,
                        mode,
                        oracle,
                        trials,
                        weight_seed,
                    }))
                }
                _ => None,
            }
        }
        "hamilton" => match instance {
            Some(InstanceSpec::Cubic { n, seed }) => match (mode, trials, weight_seed) {
                (Some(mode), Some(trials), Some(weight_seed)) => Some(Campaign::Hamilton {
                    name: name.clone(),
                    n,
                    instance_seed: seed,
                    mode,
                    trials,
                    weight_seed,
                }),
                _ => None,
            },
            Some(_) => {
                f.errors.push("`kind = hamilton` needs `generator = cubic`".into());
                None
            }
            None => None,
        },
        other => {
            f.errors.push(format!("`kind`: expected paths or hamilton, got {other:?}"));
            None
        }
    };

    match (campaign, out) {
        (Some(campaign), Some(out)) if f.errors.is_empty() => Ok(ExperimentFile {
            campaign,
            out,
            resolved: f.resolved,
        }),
        _ => Err(f.errors),
    }
}
