//! Exact MAC and parameter accounting by symbolic shape propagation.
//!
//! Conventions: a convolution costs H_out*W_out*C_out*(C_in/groups)*k^2 MACs;
//! a transposed convolution is counted at its input resolution,
//! H_in*W_in*C_out*(C_in/groups)*k^2 (each input pixel fires k^2 taps per
//! output channel); SDA costs 2*tokens^2*dim; norms always carry their 2C
//! affine parameters. Biases and normalization arithmetic are excluded by
//! the default policy.

use crate::graph::{Item, LayerSpec, ModelGraph};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostPolicy {
    pub count_attention_matmuls: bool,
    pub count_bias: bool,
    pub count_normalization: bool,
}

impl Default for CostPolicy {
    fn default() -> Self {
        CostPolicy { count_attention_matmuls: true, count_bias: false, count_normalization: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerCost {
    pub name: String,
    pub kind: String,
    pub out_channels: usize,
    pub out_h: usize,
    pub out_w: usize,
    pub macs: u64,
    pub params: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
    pub model_id: String,
    pub resolution: usize,
    pub policy: CostPolicy,
    pub layers: Vec<LayerCost>,
    pub total_macs: u64,
    pub total_params: u64,
}

pub fn analyze(model: &ModelGraph, policy: CostPolicy) -> Result<CostReport> {
    let mut c = model.input_channels;
    let mut h = model.input_res;
    let mut w = model.input_res;
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    let mut layers = Vec::new();
    for item in &model.items {
        match item {
            Item::Save => stack.push((c, h, w)),
            Item::Add => {
                let saved = stack.pop().ok_or_else(|| {
                    Error::InvalidSpec(format!("{}: residual stack underflow", model.id))
                })?;
                if saved != (c, h, w) {
                    return Err(Error::ShapeMismatch(format!(
                        "{}: residual {saved:?} vs branch {:?}",
                        model.id,
                        (c, h, w)
                    )));
                }
            }
            Item::Op(layer) => {
                let (macs, params, oc, oh, ow) = layer_cost(&layer.spec, c, h, w, policy)
                    .map_err(|e| {
                        Error::InvalidSpec(format!("{} at layer '{}': {e}", model.id, layer.name))
                    })?;
                layers.push(LayerCost {
                    name: layer.name.clone(),
                    kind: layer.spec.kind_name().to_string(),
                    out_channels: oc,
                    out_h: oh,
                    out_w: ow,
                    macs,
                    params,
                });
                c = oc;
                h = oh;
                w = ow;
            }
        }
    }
    let total_macs = layers.iter().map(|l| l.macs).sum();
    let total_params = layers.iter().map(|l| l.params).sum();
    Ok(CostReport {
        model_id: model.id.clone(),
        resolution: model.input_res,
        policy,
        layers,
        total_macs,
        total_params,
    })
}

fn layer_cost(
    spec: &LayerSpec,
    c: usize,
    h: usize,
    w: usize,
    policy: CostPolicy,
) -> Result<(u64, u64, usize, usize, usize)> {
    match spec {
        LayerSpec::Conv(s) => {
            if c != s.in_channels {
                return Err(Error::ShapeMismatch(format!(
                    "conv expects {} channels, got {c}",
                    s.in_channels
                )));
            }
            let (oh, ow) = s.out_hw(h, w)?;
            let taps = (s.out_channels * (s.in_channels / s.groups) * s.kernel * s.kernel) as u64;
            let plane = if s.transposed { h * w } else { oh * ow } as u64;
            let mut macs = plane * taps;
            let mut params = s.weight_len() as u64;
            if s.bias && policy.count_bias {
                params += s.out_channels as u64;
                macs += (oh * ow * s.out_channels) as u64;
            }
            Ok((macs, params, s.out_channels, oh, ow))
        }
        LayerSpec::Norm(s) => {
            if c != s.channels {
                return Err(Error::ShapeMismatch(format!(
                    "norm expects {} channels, got {c}",
                    s.channels
                )));
            }
            let macs = if policy.count_normalization { (2 * c * h * w) as u64 } else { 0 };
            Ok((macs, 2 * c as u64, c, h, w))
        }
        LayerSpec::Act(_) => Ok((0, 0, c, h, w)),
        LayerSpec::Sda { dim, .. } => {
            if c != 3 * dim {
                return Err(Error::ShapeMismatch(format!(
                    "sda expects {} channels, got {c}",
                    3 * dim
                )));
            }
            let tokens = (h * w) as u64;
            let macs = if policy.count_attention_matmuls {
                2 * tokens * tokens * *dim as u64
            } else {
                0
            };
            Ok((macs, 0, *dim, h, w))
        }
        LayerSpec::ReluLinear { channels, head_dim } => {
            if c != 3 * channels {
                return Err(Error::ShapeMismatch(format!(
                    "relu-linear expects {} channels, got {c}",
                    3 * channels
                )));
            }
            let hw = (h * w) as u64;
            let macs = if policy.count_attention_matmuls {
                2 * hw * *channels as u64 * *head_dim as u64 + hw * *channels as u64
            } else {
                0
            };
            Ok((macs, 0, *channels, h, w))
        }
        LayerSpec::GlobalPool => Ok((0, 0, c, 1, 1)),
    }
}

/// Plain-text per-layer table.
pub fn render_text(report: &CostReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "model {}  input {}x{}\n",
        report.model_id, report.resolution, report.resolution
    ));
    out.push_str(&format!(
        "{:<24} {:>12} {:>14} {:>12}\n",
        "layer", "out shape", "macs", "params"
    ));
    for l in &report.layers {
        out.push_str(&format!(
            "{:<24} {:>12} {:>14} {:>12}\n",
            l.name,
            format!("{}x{}x{}", l.out_channels, l.out_h, l.out_w),
            l.macs,
            l.params
        ));
    }
    out.push_str(&format!(
        "{:<24} {:>12} {:>14} {:>12}\n",
        "total",
        "",
        report.total_macs,
        report.total_params
    ));
    out.push_str(&format!(
        "totals: {:.1}M MACs, {:.2}M params\n",
        report.total_macs as f64 / 1e6,
        report.total_params as f64 / 1e6
    ));
    out
}

/// CSV form of the per-layer table, byte-stable.
pub fn report_to_csv(report: &CostReport) -> String {
    let mut out = String::from("name,kind,out_channels,out_h,out_w,macs,params\n");
    for l in &report.layers {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            l.name, l.kind, l.out_channels, l.out_h, l.out_w, l.macs, l.params
        ));
    }
    out.push_str(&format!(",total,,,,{},{}\n", report.total_macs, report.total_params));
    out
}

impl CostReport {
    /// Sum of MAC costs over layers whose name contains `needle`.
    pub fn macs_matching(&self, needle: &str) -> u64 {
        self.layers.iter().filter(|l| l.name.contains(needle)).map(|l| l.macs).sum()
    }

    pub fn params_matching(&self, needle: &str) -> u64 {
        self.layers.iter().filter(|l| l.name.contains(needle)).map(|l| l.params).sum()
    }
}
