//! Block builders for the LowFormer family. Layer inventories here are the
//! source of truth for both the forward graphs and the cost analyzer; the
//! golden reference table was generated from exactly these compositions.

use crate::graph::GraphBuilder;
use crate::ops::{ActivationKind, ConvSpec, NormSpec};
use crate::Result;

pub const HEAD_HIDDEN: usize = 3840;
pub const GAMMA: usize = 2;
/// MLP expansion 4.1 in the first attention stage, 3.075 in the last,
/// kept as integer ratios so hidden widths round identically everywhere.
pub const MLP_RATIO_MID: (usize, usize) = (41, 10);
pub const MLP_RATIO_LAST: (usize, usize) = (123, 40);

pub fn mlp_hidden(c: usize, last_stage: bool) -> usize {
    let (num, den) = if last_stage { MLP_RATIO_LAST } else { MLP_RATIO_MID };
    ((num * c) as f64 / den as f64).round() as usize
}

/// MBConv with expansion `e`. Fused form folds expansion and spatial mixing
/// into one ungrouped 3x3; unfused is the classic pw/dw/pw. Residual skip
/// only at stride 1 with matching channels.
pub fn mbconv(
    b: &mut GraphBuilder,
    prefix: &str,
    cin: usize,
    cout: usize,
    e: usize,
    fused: bool,
    stride: usize,
) {
    let hid = e * cin;
    let residual = stride == 1 && cin == cout;
    if residual {
        b.save();
    }
    if fused {
        b.conv(format!("{prefix}.fused"), ConvSpec::conv(cin, hid, 3, stride));
        b.norm(format!("{prefix}.bn1"), NormSpec::batch(hid));
        b.act(format!("{prefix}.act"), ActivationKind::Hardswish);
        b.conv(format!("{prefix}.proj"), ConvSpec::pointwise(hid, cout));
        b.norm(format!("{prefix}.bn2"), NormSpec::batch(cout));
    } else {
        b.conv(format!("{prefix}.expand"), ConvSpec::pointwise(cin, hid));
        b.act(format!("{prefix}.act1"), ActivationKind::Hardswish);
        b.conv(format!("{prefix}.dw"), ConvSpec::depthwise(hid, 3, stride));
        b.act(format!("{prefix}.act2"), ActivationKind::Hardswish);
        b.conv(format!("{prefix}.proj"), ConvSpec::pointwise(hid, cout));
        b.norm(format!("{prefix}.bn"), NormSpec::batch(cout));
    }
    if residual {
        b.add();
    }
}

/// Body MBConv inside the attention stages: expansion 4 fused while the
/// ungrouped 3x3 stays cheap (under 256 channels), expansion 6 unfused in
/// the last stage and at 256+ channels.
pub fn body_mbconv(b: &mut GraphBuilder, prefix: &str, c: usize, last_stage: bool, unfuse: bool) {
    if !last_stage {
        let fused = c < 256 && !unfuse;
        mbconv(b, prefix, c, c, 4, fused, 1);
    } else {
        mbconv(b, prefix, c, c, 6, false, 1);
    }
}

/// Lowtention: depthwise downsample by n, pointwise to stacked q/k/v at
/// dim c/gamma, scaled dot-product attention on the reduced plane, then a
/// single fused transposed 3x3 back to c channels at full resolution.
pub fn lowtention(
    b: &mut GraphBuilder,
    prefix: &str,
    c: usize,
    n: usize,
    gamma: usize,
    unfuse: bool,
) -> Result<()> {
    let d = c / gamma;
    b.save();
    b.conv(format!("{prefix}.down"), ConvSpec::depthwise(c, 3, n));
    b.conv(format!("{prefix}.qkv"), ConvSpec::pointwise(c, 3 * d));
    b.sda(format!("{prefix}.sda"), d)?;
    if unfuse {
        b.conv(format!("{prefix}.up_pw"), ConvSpec::pointwise(d, c));
        b.conv(format!("{prefix}.up_dw"), ConvSpec::transposed_depthwise(c, 3, n));
    } else {
        b.conv(format!("{prefix}.up"), ConvSpec::transposed(d, c, 3, n));
    }
    b.add();
    Ok(())
}

/// Vanilla MHSA block at full resolution and width: qkv projection, SDA,
/// output projection.
pub fn mhsa_block(b: &mut GraphBuilder, prefix: &str, c: usize) -> Result<()> {
    b.save();
    b.conv(format!("{prefix}.qkv"), ConvSpec::pointwise(c, 3 * c));
    b.sda(format!("{prefix}.sda"), c)?;
    b.conv(format!("{prefix}.proj"), ConvSpec::pointwise(c, c));
    b.add();
    Ok(())
}

/// ReLU-kernel linear attention block with a 5x5 depthwise aggregator on the
/// stacked qkv, as in the linear-attention ablation.
pub fn relu_linear_block(b: &mut GraphBuilder, prefix: &str, c: usize) {
    b.save();
    b.conv(format!("{prefix}.qkv"), ConvSpec::pointwise(c, 3 * c));
    b.conv(format!("{prefix}.dw"), ConvSpec::depthwise(3 * c, 5, 1));
    b.relu_linear(format!("{prefix}.linattn"), c);
    b.conv(format!("{prefix}.proj"), ConvSpec::pointwise(c, c));
    b.add();
}

pub fn mlp_block(b: &mut GraphBuilder, prefix: &str, c: usize, last_stage: bool) {
    let hid = mlp_hidden(c, last_stage);
    b.save();
    b.conv(format!("{prefix}.fc1"), ConvSpec::pointwise(c, hid));
    b.act(format!("{prefix}.act"), ActivationKind::Gelu);
    b.conv(format!("{prefix}.fc2"), ConvSpec::pointwise(hid, c));
    b.add();
}

/// Shared classification head: global pool, wide pointwise with layer norm,
/// then the classifier (its bias exists in the graph; the default counting
/// policy ignores biases).
pub fn head(b: &mut GraphBuilder, cin: usize, classes: usize) {
    b.pool("head.pool");
    b.conv("head.expand", ConvSpec::pointwise(cin, HEAD_HIDDEN));
    b.norm("head.ln", NormSpec::layer(HEAD_HIDDEN));
    b.act("head.act", ActivationKind::Hardswish);
    b.conv("head.fc", ConvSpec::pointwise(HEAD_HIDDEN, classes).with_bias());
}
