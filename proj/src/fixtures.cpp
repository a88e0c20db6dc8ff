#include "hpnet/fixtures.hpp"

#include <stdexcept>

#include "hpnet/dsl.hpp"

namespace hpnet {

const std::string& healthcare_fixture_text() {
  static const std::string text = R"(net Healthcare {
  place p_acct_done;
  place p_acct_in;
  place p_analysis tc [0,5];
  place p_billing;
  place p_checked;
  place p_collected;
  place p_done exit;
  place p_fin_done;
  place p_fin_in;
  place p_ins_done;
  place p_ins_in;
  place p_request entry;
  place p_spec_in;
  trans AccountingService "AccountingService" tc [0,2] td 1;
  trans FinancialService "FinancialService" tc [0,2] td 1;
  trans HealthService "HealthService" pre {subscribed} post {assessed} refine HealthServiceNet;
  trans InsuranceService "InsuranceService" tc [0,2] td 1;
  trans SpecialistService "SpecialistService" tc [0,3] td 2;
  trans t_adjust guard adjust tc [0,2] td 1;
  trans t_confirm guard confirmed tc [0,1];
  trans t_fanout;
  trans t_finjoin;
  trans t_finsplit;
  trans t_joincheck;
  arc AccountingService -> p_acct_done;
  arc FinancialService -> p_fin_done;
  arc HealthService -> p_collected;
  arc InsuranceService -> p_ins_done;
  arc SpecialistService -> p_analysis;
  arc p_acct_done -> t_joincheck;
  arc p_acct_in -> AccountingService;
  arc p_analysis -> t_adjust;
  arc p_analysis -> t_confirm;
  arc p_billing -> t_finsplit;
  arc p_checked -> t_joincheck;
  arc p_collected -> t_fanout;
  arc p_fin_done -> t_finjoin;
  arc p_fin_in -> FinancialService;
  arc p_ins_done -> t_finjoin;
  arc p_ins_in -> InsuranceService;
  arc p_request -> HealthService;
  arc p_spec_in -> SpecialistService;
  arc t_adjust -> p_checked;
  arc t_confirm -> p_checked;
  arc t_fanout -> p_acct_in;
  arc t_fanout -> p_spec_in;
  arc t_finjoin -> p_done;
  arc t_finsplit -> p_fin_in;
  arc t_finsplit -> p_ins_in;
  arc t_joincheck -> p_billing;
}
net HealthServiceNet {
  place h_assess_in;
  place h_assessed tc [0,6];
  place h_cor_d;
  place h_cor_in;
  place h_emr_d;
  place h_emr_in;
  place h_end exit;
  place h_env;
  place h_env_d;
  place h_located;
  place h_noted;
  place h_phys;
  place h_phys_d;
  place h_sensed;
  place h_start entry;
  place h_subj;
  place h_subj_d;
  trans AssessmentWS "AssessmentWS" tc [1,2] td 2;
  trans CoronaryDiagWS "CoronaryDiagWS" tc [1,3] td 2;
  trans EmerWS "EmerWS" tc [0,1] td 1;
  trans EmrWS "EmrWS" tc [0,2] td 1;
  trans EnvInfoWS "EnvInfoWS" tc [0,2] td 1;
  trans GeoWS "GeoWS" guard urgent tc [0,1] td 1;
  trans GuideWS "GuideWS" guard normal tc [0,2] td 1;
  trans PhysInfoWS "PhysInfoWS" tc [0,2] td 1;
  trans SubjFeelWS "SubjFeelWS" tc [0,3] td 1;
  trans t_acquire pre {subscribed};
  trans t_assess_join;
  trans t_diag;
  trans t_done post {assessed,notified};
  trans t_sensed;
  arc AssessmentWS -> h_assessed;
  arc CoronaryDiagWS -> h_cor_d;
  arc EmerWS -> h_noted;
  arc EmrWS -> h_emr_d;
  arc EnvInfoWS -> h_env_d;
  arc GeoWS -> h_located;
  arc GuideWS -> h_noted;
  arc PhysInfoWS -> h_phys_d;
  arc SubjFeelWS -> h_subj_d;
  arc h_assess_in -> AssessmentWS;
  arc h_assessed -> GeoWS;
  arc h_assessed -> GuideWS;
  arc h_cor_d -> t_assess_join;
  arc h_cor_in -> CoronaryDiagWS;
  arc h_emr_d -> t_assess_join;
  arc h_emr_in -> EmrWS;
  arc h_env -> EnvInfoWS;
  arc h_env_d -> t_sensed;
  arc h_located -> EmerWS;
  arc h_noted -> t_done;
  arc h_phys -> PhysInfoWS;
  arc h_phys_d -> t_sensed;
  arc h_sensed -> t_diag;
  arc h_start -> t_acquire;
  arc h_subj -> SubjFeelWS;
  arc h_subj_d -> t_sensed;
  arc t_acquire -> h_env;
  arc t_acquire -> h_phys;
  arc t_acquire -> h_subj;
  arc t_assess_join -> h_assess_in;
  arc t_diag -> h_cor_in;
  arc t_diag -> h_emr_in;
  arc t_done -> h_end;
  arc t_sensed -> h_sensed;
}
)";
  return text;
}

HierarchicalNet healthcare_fixture() {
  NetParseResult parsed = parse_net({healthcare_fixture_text(), "<healthcare>"});
  if (!parsed.ok())
    throw std::logic_error("bundled healthcare fixture failed to parse");
  return std::move(*parsed.net);
}

}  // namespace hpnet
