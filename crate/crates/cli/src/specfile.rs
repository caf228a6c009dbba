//! Plain key=value code description files. `spec new` resolves every default
//! (modulus, basis, eta) before writing, so a saved file pins the code
//! exactly and loading it is byte-for-byte reproducible.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rankforms::code::{make_code_spec, CodeParams, CodeSpec, Family};

pub fn save(spec: &CodeSpec, path: &Path) -> Result<()> {
    let ctx = spec.ctx();
    let mut out = String::new();
    writeln!(out, "family={}", spec.family().name())?;
    writeln!(out, "p={}", ctx.p())?;
    writeln!(out, "s={}", ctx.s())?;
    writeln!(out, "n={}", ctx.n())?;
    writeln!(out, "d={}", spec.d())?;
    let modulus: Vec<String> = ctx.modulus().iter().map(|c| c.to_string()).collect();
    writeln!(out, "modulus={}", modulus.join(","))?;
    let basis: Vec<String> = spec
        .basis()
        .points()
        .iter()
        .map(|e| ctx.to_int(e).to_string())
        .collect();
    writeln!(out, "basis={}", basis.join(","))?;
    if let Some(eta) = spec.eta() {
        writeln!(out, "eta={}", ctx.to_int(eta))?;
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<CodeSpec> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut family = None;
    let mut p = None;
    let mut s = None;
    let mut n = None;
    let mut d = None;
    let mut modulus = None;
    let mut basis = None;
    let mut eta = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| anyhow!("line {}: expected key=value", lineno + 1))?;
        match key {
            "family" => {
                family = Some(
                    Family::parse(value).ok_or_else(|| anyhow!("unknown family {value:?}"))?,
                )
            }
            "p" => p = Some(value.parse::<u64>()?),
            "s" => s = Some(value.parse::<usize>()?),
            "n" => n = Some(value.parse::<usize>()?),
            "d" => d = Some(value.parse::<usize>()?),
            "modulus" => {
                modulus = Some(
                    value
                        .split(',')
                        .map(|t| t.trim().parse::<u64>().map_err(Into::into))
                        .collect::<Result<Vec<u64>>>()?,
                )
            }
            "basis" => {
                basis = Some(
                    value
                        .split(',')
                        .map(|t| t.trim().parse::<u128>().map_err(Into::into))
                        .collect::<Result<Vec<u128>>>()?,
                )
            }
            "eta" => eta = Some(value.parse::<u128>()?),
            other => bail!("line {}: unknown key {other:?}", lineno + 1),
        }
    }
    let params = CodeParams {
        family: family.ok_or_else(|| anyhow!("missing family"))?,
        p: p.ok_or_else(|| anyhow!("missing p"))?,
        s: s.ok_or_else(|| anyhow!("missing s"))?,
        n: n.ok_or_else(|| anyhow!("missing n"))?,
        d: d.ok_or_else(|| anyhow!("missing d"))?,
        modulus,
        basis,
        eta,
    };
    make_code_spec(&params).map_err(|e| anyhow!("{e}"))
}
