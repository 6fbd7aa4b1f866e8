pub mod calibrate;
pub mod reconstruct;
pub mod sweep;
pub mod synth;

use gelcal::synth::NormalModel;

/// CLI name of the forward-model choice for synthetic data.
pub fn parse_model(s: &str) -> Result<NormalModel, String> {
    match s {
        "yoffe-exact" => Ok(NormalModel::YoffeExact),
        "tatara-exact" => Ok(NormalModel::TataraExact),
        "fit-form" => Ok(NormalModel::FitForm),
        other => Err(format!(
            "unknown model {other:?}; expected yoffe-exact, tatara-exact, or fit-form"
        )),
    }
}

pub fn model_name(model: NormalModel) -> &'static str {
    match model {
        NormalModel::YoffeExact => "yoffe-exact",
        NormalModel::TataraExact => "tatara-exact",
        NormalModel::FitForm => "fit-form",
    }
}
