#![allow(dead_code)]

pub mod appendix;
