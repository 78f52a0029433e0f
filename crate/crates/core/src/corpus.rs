//! Named collections of test groups.
//!
//! Corpus files list one group per line:
//!
//! ```text
//! # id   constructor  parameters
//! s4     symmetric    4
//! q8     quaternion
//! a5xs3  product      a5 s3
//! mine   file         groups/mine.grp
//! ```
//!
//! Constructors: `cyclic n`, `symmetric n`, `alternating n`, `dihedral order`,
//! `quaternion`, `elementary-abelian p rank`, `sl2 p`, `product id id`
//! (ids defined earlier in the file), `wreath-c2 id`, `file path` (relative
//! to the corpus file).

use std::collections::HashMap;
use std::path::Path;

use crate::error::{Error, Result};
use crate::formation::is_prime;
use crate::group::PermGroup;
use crate::io::parse_group_file;
use crate::library::*;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub group: PermGroup,
}

impl CorpusEntry {
    pub fn new(id: impl Into<String>, group: PermGroup) -> Self {
        CorpusEntry { id: id.into(), group }
    }
}

/// Largest order admitted into the `extended` corpus's pairwise products.
pub const EXTENDED_PRODUCT_LIMIT: u64 = 200;

fn smoke() -> Vec<CorpusEntry> {
    let mut v: Vec<CorpusEntry> = (1..=8).map(|n| CorpusEntry::new(format!("C{n}"), cyclic(n))).collect();
    v.push(CorpusEntry::new("S3", symmetric(3)));
    v.push(CorpusEntry::new("S4", symmetric(4)));
    v.push(CorpusEntry::new("Q8", quaternion()));
    v.push(CorpusEntry::new("D8", dihedral(8)));
    v.push(CorpusEntry::new("V4", elementary_abelian(2, 2)));
    v
}

fn standard() -> Vec<CorpusEntry> {
    let mut v = smoke();
    v.push(CorpusEntry::new("A4", alternating(4)));
    v.push(CorpusEntry::new("A5", alternating(5)));
    v.push(CorpusEntry::new("S5", symmetric(5)));
    v.push(CorpusEntry::new("SL(2,3)", special_linear_2(3)));
    v.push(CorpusEntry::new("SL(2,5)", special_linear_2(5)));
    for order in (10..=24).step_by(2) {
        v.push(CorpusEntry::new(format!("D{order}"), dihedral(order)));
    }
    v.push(CorpusEntry::new("C2xA5", cyclic(2).direct_product(&alternating(5))));
    v.push(CorpusEntry::new("A5xS3", alternating(5).direct_product(&symmetric(3))));
    for p in [2, 3, 5] {
        for rank in 2..=3 {
            if (p, rank) == (2, 2) {
                continue; // V4, already in smoke
            }
            let id = format!("E{}", (p as u64).pow(rank as u32));
            v.push(CorpusEntry::new(id, elementary_abelian(p, rank)));
        }
    }
    v
}

/// `standard` plus `G×H` for every unordered pair of nontrivial standard
/// groups with `|G|·|H| ≤` [`EXTENDED_PRODUCT_LIMIT`].
fn extended() -> Vec<CorpusEntry> {
    let base = standard();
    let mut v = base.clone();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            let order = a.group.order() * b.group.order();
            if a.group.is_trivial() || b.group.is_trivial() || order > EXTENDED_PRODUCT_LIMIT {
                continue;
            }
            v.push(CorpusEntry::new(format!("{}x{}", a.id, b.id), a.group.direct_product(&b.group)));
        }
    }
    v
}

pub fn builtin_corpus(name: &str) -> Result<Vec<CorpusEntry>> {
    match name {
        "smoke" => Ok(smoke()),
        "standard" => Ok(standard()),
        "extended" => Ok(extended()),
        _ => Err(Error::input(format!(
            "unknown corpus {name:?} (expected smoke, standard or extended)"
        ))),
    }
}

/// Parses a corpus file. `base` resolves `file` entries.
pub fn parse_corpus_spec(text: &str, base: &Path) -> Result<Vec<CorpusEntry>> {
    let mut out: Vec<CorpusEntry> = Vec::new();
    let mut by_id: HashMap<String, usize> = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.len() < 2 {
            return Err(err(format!("expected `id constructor ...`, found {line:?}")));
        }
        let (id, ctor, args) = (words[0], words[1], &words[2..]);
        if by_id.contains_key(id) {
            return Err(err(format!("duplicate id {id:?}")));
        }
        let num = |k: usize| -> Result<usize> {
            args.get(k)
                .ok_or_else(|| err(format!("{ctor} needs {} parameter(s)", k + 1)))?
                .parse()
                .map_err(|_| err(format!("bad number {:?}", args[k])))
        };
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(err(format!("{ctor} takes {n} parameter(s), got {}", args.len())))
            }
        };
        let lookup = |k: usize| -> Result<PermGroup> {
            let name = args.get(k).ok_or_else(|| err(format!("{ctor} needs an id")))?;
            by_id
                .get(*name)
                .map(|&j| out[j].group.clone())
                .ok_or_else(|| err(format!("unknown id {name:?}")))
        };
        let group = match ctor {
            "cyclic" | "symmetric" | "alternating" => {
                arity(1)?;
                let n = num(0)?;
                if n == 0 {
                    return Err(err("degree must be positive".into()));
                }
                match ctor {
                    "cyclic" => cyclic(n),
                    "symmetric" => symmetric(n),
                    _ => alternating(n),
                }
            }
            "dihedral" => {
                arity(1)?;
                let order = num(0)?;
                if order < 6 || order % 2 != 0 {
                    return Err(err(format!("dihedral order must be even and at least 6, got {order}")));
                }
                dihedral(order)
            }
            "quaternion" => {
                arity(0)?;
                quaternion()
            }
            "elementary-abelian" => {
                arity(2)?;
                let (p, rank) = (num(0)?, num(1)?);
                if !is_prime(p as u64) || rank == 0 {
                    return Err(err("elementary-abelian needs a prime and a positive rank".to_string()));
                }
                elementary_abelian(p, rank)
            }
            "sl2" => {
                arity(1)?;
                let p = num(0)?;
                if !is_prime(p as u64) {
                    return Err(err(format!("sl2 needs a prime, got {p}")));
                }
                special_linear_2(p)
            }
            "product" => {
                arity(2)?;
                lookup(0)?.direct_product(&lookup(1)?)
            }
            "wreath-c2" => {
                arity(1)?;
                wreath_with_c2(&lookup(0)?)
            }
            "file" => {
                arity(1)?;
                let path = base.join(args[0]);
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
                parse_group_file(&text).map_err(|e| err(format!("{}: {e}", path.display())))?
            }
            other => return Err(err(format!("unknown constructor {other:?}"))),
        };
        by_id.insert(id.to_string(), out.len());
        out.push(CorpusEntry::new(id, group));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_has_thirteen_groups() {
        let c = builtin_corpus("smoke").unwrap();
        assert_eq!(c.len(), 13);
        assert_eq!(c[0].group.order(), 1);
        assert_eq!(c[11].id, "D8");
        assert_eq!(c[12].group.order(), 4);
    }

    #[test]
    fn standard_contents() {
        let c = builtin_corpus("standard").unwrap();
        assert_eq!(c.len(), 33);
        let find = |id: &str| c.iter().find(|e| e.id == id).unwrap().group.order();
        assert_eq!(find("SL(2,5)"), 120);
        assert_eq!(find("A5xS3"), 360);
        assert_eq!(find("E125"), 125);
        assert_eq!(find("D24"), 24);
        assert!(c.iter().all(|e| e.group.order() <= 360));
        let mut ids: Vec<&str> = c.iter().map(|e| e.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), c.len());
    }

    #[test]
    fn extended_contains_standard() {
        let s = builtin_corpus("standard").unwrap();
        let e = builtin_corpus("extended").unwrap();
        assert!(e.len() > s.len());
        assert!(e[s.len()..].iter().all(|x| x.group.order() <= EXTENDED_PRODUCT_LIMIT));
        assert!(builtin_corpus("huge").is_err());
    }

    #[test]
    fn corpus_spec_files() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("v4.grp"), "degree 4\n(0 1)(2 3)\n(0 2)(1 3)\n").unwrap();
        let text = "# test\ns3 symmetric 3\nc2 cyclic 2\nd product s3 c2\nv file v4.grp\nw wreath-c2 c2\n";
        let c = parse_corpus_spec(text, dir.path()).unwrap();
        let orders: Vec<u64> = c.iter().map(|e| e.group.order()).collect();
        assert_eq!(orders, vec![6, 2, 12, 4, 8]);
        assert!(matches!(
            parse_corpus_spec("a cyclic 2\na cyclic 3\n", dir.path()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_corpus_spec("a frobnicate 2\n", dir.path()),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(parse_corpus_spec("a product b c\n", dir.path()).is_err());
        assert!(parse_corpus_spec("a dihedral 7\n", dir.path()).is_err());
    }
}
