//! Generator specs: `mu:<u>`, `sigma`, `id`, `zero`, `mirror`, `chr:<deltas>`, `poly:<c0,c1,..>`,
//! `linear:<r>` (every linear map of radius at most `r`) and `file:<path>` (a CA1 file).

use calab_core::ca1d::{chr_product_map, BlockMap};
use calab_core::linca::{RingSpec, ShiftPolynomial};
use calab_core::mulca::{mu_const, mu_u, ConstMap, MulSpec};
use calab_core::symcore::{parse_symbols, Alphabet, Symbol};

use crate::error::{io_error, LabError, Result};

/// A named generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub map: BlockMap,
}

fn bad(spec: &str) -> LabError {
    LabError::Config(format!("bad generator {spec:?}"))
}

/// Parses a list of specs separated by `;` or whitespace.
pub fn parse_generators(text: &str, alphabet: Alphabet) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    for spec in text.split(|c: char| c == ';' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        out.extend(parse_one(spec, alphabet)?);
    }
    if out.is_empty() {
        return Err(LabError::Config("no generators given".into()));
    }
    Ok(out)
}

/// Parses exactly one map.
pub fn parse_map(spec: &str, alphabet: Alphabet) -> Result<BlockMap> {
    let mut all = parse_one(spec.trim(), alphabet)?;
    if all.len() != 1 {
        return Err(LabError::Config(format!("{spec:?} names {} maps, expected one", all.len())));
    }
    Ok(all.remove(0).map)
}

fn single(label: &str, map: BlockMap) -> Vec<Generator> {
    vec![Generator { label: label.to_string(), map }]
}

fn parse_one(spec: &str, alphabet: Alphabet) -> Result<Vec<Generator>> {
    let (head, arg) = spec.split_once(':').unwrap_or((spec, ""));
    Ok(match head {
        "sigma" => single(spec, BlockMap::shift(alphabet)),
        "id" => single(spec, mu_const(alphabet, ConstMap::Identity)),
        "zero" => single(spec, mu_const(alphabet, ConstMap::Zero)),
        "mirror" => single(spec, mu_const(alphabet, ConstMap::Mirror)),
        "mu" => {
            let u: i64 = arg.parse().map_err(|_| bad(spec))?;
            single(spec, mu_u(&MulSpec::new(alphabet, u)?)?)
        }
        "chr" => {
            let deltas = arg
                .chars()
                .map(|c| c.to_digit(2).map(|d| d as Symbol).ok_or_else(|| bad(spec)))
                .collect::<Result<Vec<_>>>()?;
            single(spec, chr_product_map(alphabet, &deltas, deltas.len())?.map)
        }
        "poly" => {
            let ring = RingSpec::modular(alphabet.size())?;
            single(spec, ShiftPolynomial::new(ring, parse_symbols(arg, alphabet)?)?.to_blockmap())
        }
        "linear" => {
            let r: usize = arg.parse().map_err(|_| bad(spec))?;
            let ring = RingSpec::modular(alphabet.size())?;
            alphabet
                .words(r + 1)
                .map(|c| {
                    let label = format!("poly:{}", calab_core::symcore::format_symbols(&c));
                    Ok(Generator { label, map: ShiftPolynomial::new(ring.clone(), c)?.to_blockmap() })
                })
                .collect::<Result<Vec<_>>>()?
        }
        "file" => {
            let text = std::fs::read_to_string(arg).map_err(io_error(arg))?;
            let map: BlockMap = text.parse()?;
            map.alphabet().ensure_same(alphabet)?;
            single(spec, map)
        }
        _ => return Err(bad(spec)),
    })
}
