//! Plain-text derivation files.
//!
//! ```text
//! # comment lines and blank lines are ignored
//! group C:24                 # or: group cayley path/to/table.txt
//! field GF(2)
//! image x = 1 + x + x^3 + x^4 + x^5 + x^7 + x^9 + x^12
//! ```
//!
//! `group` takes a family descriptor (`C:n`, `A:n1,n2,...`, `D:2n`) or the
//! word `cayley` followed by a path to a Cayley table file, resolved
//! relative to the derivation file. `field` takes a field literal such as
//! `GF(2)`, `GF(4)` or `GF(2^2)[1,1,1]`. There must be exactly one `image`
//! line per generator.

use std::path::{Path, PathBuf};

use crate::derivations::GeneratorImageMap;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::groupring::GroupAlgebra;
use crate::groups::{Family, FiniteGroup};

/// Parsed contents of a derivation file.
#[derive(Debug, Clone)]
pub struct DerivationFile {
    pub algebra: GroupAlgebra,
    pub map: GeneratorImageMap,
}

/// Builds a group from a family descriptor.
pub fn parse_group(descriptor: &str) -> Result<FiniteGroup> {
    descriptor.trim().parse::<Family>()?.build()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

/// Parses a derivation file; `base` resolves relative Cayley table paths.
pub fn parse_derivation_file(text: &str, base: &Path) -> Result<DerivationFile> {
    let mut group = None;
    let mut field = None;
    let mut images: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let dup = |what: &str| Error::Parse(format!("line {lineno}: second {what} line"));
        match key {
            "group" => {
                if group.is_some() {
                    return Err(dup("group"));
                }
                group = Some(match rest.strip_prefix("cayley") {
                    Some(p) if p.starts_with(char::is_whitespace) => {
                        let path: PathBuf = base.join(p.trim());
                        FiniteGroup::from_cayley_text(&read(&path)?)?
                    }
                    _ => parse_group(rest)?,
                });
            }
            "field" => {
                if field.is_some() {
                    return Err(dup("field"));
                }
                field = Some(rest.parse::<FieldSpec>()?);
            }
            "image" => {
                let (name, value) = rest.split_once('=').ok_or_else(|| {
                    Error::Parse(format!("line {lineno}: expected 'image <generator> = <element>'"))
                })?;
                images.push((lineno, name.trim().to_string(), value.trim().to_string()));
            }
            other => return Err(Error::Parse(format!("line {lineno}: unknown key {other:?}"))),
        }
    }
    let group = group.ok_or_else(|| Error::Parse("missing group line".into()))?;
    let field = field.ok_or_else(|| Error::Parse("missing field line".into()))?;
    let algebra = GroupAlgebra::new(group, field);
    let gens = algebra.group().presentation().generators().to_vec();
    let mut values: Vec<Option<String>> = vec![None; gens.len()];
    for (lineno, name, value) in images {
        let i = algebra
            .group()
            .presentation()
            .generator_index(&name)
            .ok_or_else(|| Error::Parse(format!("line {lineno}: unknown generator {name:?}")))?;
        if values[i].replace(value).is_some() {
            return Err(Error::Parse(format!("line {lineno}: second image for {name}")));
        }
    }
    let mut elems = Vec::with_capacity(gens.len());
    for (name, value) in gens.iter().zip(values) {
        let value = value.ok_or_else(|| Error::Parse(format!("no image for generator {name}")))?;
        elems.push(algebra.parse(&value)?);
    }
    let map = GeneratorImageMap::new(&algebra, elems)?;
    Ok(DerivationFile { algebra, map })
}

pub fn load_derivation_file(path: &Path) -> Result<DerivationFile> {
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_derivation_file(&read(path)?, base)
}

/// Writes `map` in the file format. Only family-built groups can be written.
pub fn format_derivation_file(map: &GeneratorImageMap) -> Result<String> {
    let alg = map.algebra();
    let family = alg.group().family();
    if *family == Family::Custom {
        return Err(Error::UnsupportedGroup("custom groups have no descriptor".into()));
    }
    let mut out = format!("group {family}\nfield {}\n", alg.field());
    for (name, img) in alg.group().presentation().generators().iter().zip(map.images()) {
        out.push_str(&format!("image {name} = {img}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = "# golay\ngroup C:24\nfield GF(2)\nimage x = 1+x+x^3+x^4+x^5+x^7+x^9+x^12\n";
        let f = parse_derivation_file(text, Path::new(".")).unwrap();
        assert!(f.map.extends_to_derivation());
        let again = format_derivation_file(&f.map).unwrap();
        let g = parse_derivation_file(&again, Path::new(".")).unwrap();
        assert_eq!(g.map.to_vector(), f.map.to_vector());
    }

    #[test]
    fn errors() {
        let bad = [
            "field GF(2)\nimage x = 1",
            "group C:4\nimage x = 1",
            "group C:4\nfield GF(2)",
            "group C:4\nfield GF(2)\nimage y = 1",
            "group C:4\nfield GF(2)\nimage x = 1\nimage x = x",
            "group C:4\nfield GF(2)\nimage x 1",
            "group C:4\nfield GF(2)\nimage x = 1 +",
            "group Q:8\nfield GF(2)\nimage x = 1",
            "group C:4\nfield GF(6)\nimage x = 1",
            "group C:4\nfield GF(2)\nweight 3",
            "group cayley missing.txt\nfield GF(2)",
        ];
        for b in bad {
            assert!(parse_derivation_file(b, Path::new("/nonexistent")).is_err(), "{b}");
        }
    }

    #[test]
    fn cayley_groups() {
        let dir = std::env::temp_dir().join(format!("derfile-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("c3.txt"), "3\n0 1 2\n1 2 0\n2 0 1\ngenerators a=1\nrelator a^3\n").unwrap();
        let text = "group cayley c3.txt\nfield GF(3)\nimage a = 1 + a\n";
        let f = parse_derivation_file(text, &dir).unwrap();
        assert!(f.map.extends_to_derivation());
        assert!(format_derivation_file(&f.map).is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
