//! Flat `key = value` config files. Entries become `--key value` arguments
//! placed right after the subcommand, so flags given on the command line
//! (which come later) override them.

use std::ffi::OsString;
use std::path::Path;

use anyhow::{bail, Context, Result};

fn config_path(args: &[OsString]) -> Result<Option<OsString>> {
    let mut found = None;
    let mut iter = args.iter();
    while let Some(arg) = iter.next() {
        let text = arg.to_string_lossy();
        if text == "--config" {
            match iter.next() {
                Some(path) => found = Some(path.clone()),
                None => bail!("--config needs a file path"),
            }
        } else if let Some(path) = text.strip_prefix("--config=") {
            found = Some(OsString::from(path));
        }
    }
    Ok(found)
}

/// Parses the file into argument tokens.
pub fn config_tokens(text: &str) -> Result<Vec<OsString>> {
    let mut tokens = Vec::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("line {}: expected `key = value`, got {line:?}", number + 1);
        };
        let (key, value) = (key.trim().trim_start_matches("--"), value.trim());
        if key.is_empty() || key == "config" {
            bail!("line {}: invalid key {key:?}", number + 1);
        }
        match value {
            "true" => tokens.push(format!("--{key}").into()),
            "false" => {}
            _ => tokens.push(format!("--{key}={value}").into()),
        }
    }
    Ok(tokens)
}

/// Splices config-file arguments into `argv`.
pub fn expand_args(mut argv: Vec<OsString>) -> Result<Vec<OsString>> {
    if argv.len() < 2 || argv[1].to_string_lossy().starts_with('-') {
        return Ok(argv);
    }
    let Some(path) = config_path(&argv[2..])? else {
        return Ok(argv);
    };
    let path = Path::new(&path);
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config file {}", path.display()))?;
    let tokens = config_tokens(&text).with_context(|| format!("in config file {}", path.display()))?;
    argv.splice(2..2, tokens);
    Ok(argv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_from_flat_file() {
        let tokens = config_tokens("# sweep\na2 = -1e4\nlog = true\n\nregime-check = false\n").unwrap();
        assert_eq!(tokens, vec![OsString::from("--a2=-1e4"), OsString::from("--log")]);
        assert!(config_tokens("a2 1e4").is_err());
    }

    #[test]
    fn splices_after_subcommand() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        std::fs::write(&path, "a0 = 3\n").unwrap();
        let argv: Vec<OsString> = ["hyperspin", "roots", "--config", path.to_str().unwrap(), "--a0", "5"]
            .iter()
            .map(OsString::from)
            .collect();
        let expanded = expand_args(argv).unwrap();
        assert_eq!(expanded[2], OsString::from("--a0=3"));
        assert_eq!(expanded.last().unwrap(), &OsString::from("5"));
    }
}
