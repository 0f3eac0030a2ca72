use std::path::Path;

use mvlat::algebra::FinAlgebra;
use mvlat::mvtop::MVTopology;

use crate::{CliError, Context, Result};

pub enum Input {
    Algebra(FinAlgebra),
    Space(MVTopology),
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn tag(path: &Path) -> impl Fn(mvlat::Error) -> CliError + '_ {
    move |source| CliError::Library {
        path: path.display().to_string(),
        source,
    }
}

/// Spaces are recognised by their `points` field; everything else is read
/// as an algebra.
pub fn load(path: &Path, opens_limit: usize) -> Result<Input> {
    let text = read(path)?;
    let is_space = serde_json::from_str::<serde_json::Value>(&text)
        .ok()
        .and_then(|v| v.as_object().map(|o| o.contains_key("points")))
        .unwrap_or(false);
    if is_space {
        MVTopology::from_json(&text, opens_limit).map(Input::Space).map_err(tag(path))
    } else {
        FinAlgebra::from_json(&text).map(Input::Algebra).map_err(tag(path))
    }
}

impl Context {
    fn expect_inputs(&self, n: usize, roles: &str) -> Result<()> {
        if self.inputs.len() != n {
            return Err(CliError::Usage(format!(
                "expected {n} --input file(s) ({roles}), got {}",
                self.inputs.len()
            )));
        }
        Ok(())
    }

    /// Exactly `n` algebra inputs, in order.
    pub fn algebras(&self, n: usize, roles: &str) -> Result<Vec<FinAlgebra>> {
        self.expect_inputs(n, roles)?;
        self.inputs
            .iter()
            .map(|p| match load(p, self.limits.opens)? {
                Input::Algebra(a) => Ok(a),
                Input::Space(_) => Err(CliError::Usage(format!("{}: expected an algebra, got a space", p.display()))),
            })
            .collect()
    }

    pub fn single(&self) -> Result<Input> {
        self.expect_inputs(1, "algebra or space")?;
        load(&self.inputs[0], self.limits.opens)
    }
}
