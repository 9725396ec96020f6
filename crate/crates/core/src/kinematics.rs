//! Forward kinematics of the two-DoF shoulder with the elbow fixed at full
//! extension: homogeneous transform and wrist position from joint angles,
//! angle extraction from a wrist position, and range-of-motion clamping.

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Range of motion for shoulder abduction/adduction (theta1), radians.
pub const THETA1_ROM: (f64, f64) = (0.1745, 1.3963);
/// Range of motion for shoulder flexion/extension (theta2), radians.
pub const THETA2_ROM: (f64, f64) = (0.1745, 0.5585);

/// One of the two assisted shoulder degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Joint {
    /// Abduction/adduction, theta1.
    AbAd,
    /// Flexion/extension, theta2.
    FlexExt,
}

impl Joint {
    pub fn index(self) -> u8 {
        match self {
            Joint::AbAd => 1,
            Joint::FlexExt => 2,
        }
    }

    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Joint::AbAd),
            2 => Ok(Joint::FlexExt),
            _ => Err(Error::Config(format!("joint index must be 1 or 2, got {i}"))),
        }
    }

    /// (min, max) admissible angle in radians.
    pub fn rom(self) -> (f64, f64) {
        match self {
            Joint::AbAd => THETA1_ROM,
            Joint::FlexExt => THETA2_ROM,
        }
    }
}

impl Serialize for Joint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

impl<'de> Deserialize<'de> for Joint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let i = u8::deserialize(d)?;
        Joint::from_index(i).map_err(serde::de::Error::custom)
    }
}

/// Shoulder joint angles in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointAngles {
    /// Abduction/adduction.
    pub theta1: f64,
    /// Flexion/extension.
    pub theta2: f64,
}

impl JointAngles {
    pub fn new(theta1: f64, theta2: f64) -> Self {
        Self { theta1, theta2 }
    }
}

/// Fixed geometry of the arm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArmGeometry {
    /// Upper-arm length in meters.
    pub upper_arm_length: f64,
}

impl Default for ArmGeometry {
    fn default() -> Self {
        Self { upper_arm_length: 0.14 }
    }
}

/// Cartesian wrist position in the shoulder-origin frame, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WristPosition {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Homogeneous transform from the shoulder origin to the wrist frame.
///
/// The rotation block is orthonormal and the bottom row is (0, 0, 0, 1).
pub fn dh_transform(angles: JointAngles, geom: ArmGeometry) -> Matrix4<f64> {
    let (s1, c1) = angles.theta1.sin_cos();
    let (s2, c2) = angles.theta2.sin_cos();
    let l = geom.upper_arm_length;
    Matrix4::new(
        c1 * c2, -c1 * s2, -s1, l * c1 * c2,
        c2 * s1, -s1 * s2, c1, l * c2 * s1,
        -s2, -c2, 0.0, -l * s2,
        0.0, 0.0, 0.0, 1.0,
    )
}

/// Wrist position for given joint angles (translation column of the transform).
pub fn wrist_position(angles: JointAngles, geom: ArmGeometry) -> WristPosition {
    let (s1, c1) = angles.theta1.sin_cos();
    let (s2, c2) = angles.theta2.sin_cos();
    let l = geom.upper_arm_length;
    WristPosition {
        x: l * c1 * c2,
        y: l * c2 * s1,
        z: -l * s2,
    }
}

/// Recover joint angles from a wrist position.
///
/// theta1 = atan2(y, x), theta2 = asin(-z / l). Fails when |z| exceeds the
/// arm length or when x = y = 0 (theta1 undefined).
pub fn angles_from_wrist(pos: WristPosition, geom: ArmGeometry) -> Result<JointAngles> {
    let l = geom.upper_arm_length;
    if pos.z.abs() > l {
        return Err(Error::Domain(format!(
            "|z| = {} exceeds arm length {l}",
            pos.z.abs()
        )));
    }
    if pos.x == 0.0 && pos.y == 0.0 {
        return Err(Error::Domain(
            "x = y = 0: abduction angle is undefined".into(),
        ));
    }
    Ok(JointAngles {
        theta1: pos.y.atan2(pos.x),
        theta2: (-pos.z / l).asin(),
    })
}

/// Clamp angles into their range of motion. Flags are true where clamping
/// occurred. Idempotent.
pub fn clamp_to_rom(angles: JointAngles) -> (JointAngles, (bool, bool)) {
    let (lo1, hi1) = THETA1_ROM;
    let (lo2, hi2) = THETA2_ROM;
    let t1 = angles.theta1.clamp(lo1, hi1);
    let t2 = angles.theta2.clamp(lo2, hi2);
    (
        JointAngles { theta1: t1, theta2: t2 },
        (t1 != angles.theta1, t2 != angles.theta2),
    )
}
