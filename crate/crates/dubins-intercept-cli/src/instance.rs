//! Instance schema shared by the flag interface and the batch file format.

use serde::Deserialize;

use dubins_intercept::geometry::{Configuration, Point};

/// Problem flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Intercept,
    Drift,
}

/// One instance as it appears in a batch file (`[[instance]]` tables).
///
/// `start` is `[x, y, heading_degrees]` of the pursuer (default
/// `[0, 0, 90]`), `speed` its cruise speed (default 1); target speeds and
/// winds are in absolute units and must stay below the pursuer speed.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub mode: Mode,
    pub rho: f64,
    #[serde(default)]
    pub p0: Option<[f64; 2]>,
    #[serde(default)]
    pub v: Option<[f64; 2]>,
    #[serde(default)]
    pub terminal: Option<[f64; 2]>,
    #[serde(default)]
    pub wind: Option<[f64; 2]>,
    #[serde(default)]
    pub start: Option<[f64; 3]>,
    #[serde(default)]
    pub speed: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct BatchFile {
    #[serde(rename = "instance")]
    pub instances: Vec<InstanceSpec>,
}

impl InstanceSpec {
    pub fn start_config(&self) -> Configuration {
        match self.start {
            Some([x, y, deg]) => Configuration::new(x, y, deg.to_radians()),
            None => Configuration::canonical(),
        }
    }

    pub fn pursuer_speed(&self) -> f64 {
        self.speed.unwrap_or(1.0)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.rho > 0.0) {
            return Err(format!("rho must be positive, got {}", self.rho));
        }
        let speed = self.pursuer_speed();
        if !(speed > 0.0) {
            return Err(format!("pursuer speed must be positive, got {speed}"));
        }
        match self.mode {
            Mode::Intercept => {
                let (Some(_), Some(v)) = (self.p0, self.v) else {
                    return Err("intercept mode needs p0 and v".into());
                };
                let ratio = Point::new(v[0], v[1]).norm() / speed;
                if !(ratio < 1.0) {
                    return Err(format!(
                        "target speed ratio {ratio} must be strictly below 1"
                    ));
                }
            }
            Mode::Drift => {
                let (Some(_), Some(w)) = (self.terminal, self.wind) else {
                    return Err("drift mode needs terminal and wind".into());
                };
                let ratio = Point::new(w[0], w[1]).norm() / speed;
                if !(ratio < 1.0) {
                    return Err(format!(
                        "wind speed ratio {ratio} must be strictly below 1"
                    ));
                }
            }
        }
        Ok(())
    }
}

pub fn parse_batch(text: &str) -> Result<Vec<InstanceSpec>, String> {
    let parsed: BatchFile = toml::from_str(text).map_err(|e| format!("batch parse: {e}"))?;
    if parsed.instances.is_empty() {
        return Err("batch file holds no instances".into());
    }
    for (i, inst) in parsed.instances.iter().enumerate() {
        inst.validate().map_err(|e| format!("instance {i}: {e}"))?;
    }
    Ok(parsed.instances)
}
