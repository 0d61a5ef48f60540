#include "catalog_data.hpp"

namespace spinv::detail {

const std::vector<NamedNotation> three_spinor_table = {
    {"I2a", "C5_ij C5_mk C5_nl P_jkl P_pmn C5_pr C5_qs C5_ut P_rst P_iqu"},
    {"I2b", "C5_ij C5_mk C5_nl P_jkl P_ipn C5_qr C5_ps C5_ut P_rst P_qmu"},
    {"I2c", "C5_ij C5_mk C5_nl P_jkl P_imp C5_qr C5_us C5_pt P_rst P_qun"},
    {"I2d", "C5_ij C5_mk C5_nl P_jkl P_ipt C5_qr C5_ps C5_ut P_rsn P_qmu"},
    {"I3a", "C_ij C_mk C_nl P_jkl P_qmn C_qr C_ps C_ut P_rst P_ipu"},
    {"I3b", "C_ij C_mk C_nl P_jkl P_ipn C_qr C_ps C_ut P_rst P_qmu"},
    {"I3c", "C_ij C_mk C_nl P_jkl P_imu C_qr C_ps C_ut P_rst P_qpn"},
    {"I3d", "C_ij C_mk C_nl P_jkl P_ipt C_qr C_ps C_ut P_rsn P_qmu"},
    {"I4a", "C5_ij C_mk C5_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I4b", "C5_ij C_mk C5_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I4c", "C5_ij C_mk C5_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I4d", "C5_ij C_mk C5_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I5a", "C5_ij C5_mk C_nl P_jkl P_pmn C5_pr C5_qs C_ut P_rst P_iqu"},
    {"I5b", "C5_ij C5_mk C_nl P_jkl P_ipn C5_qr C5_ps C_ut P_rst P_qmu"},
    {"I5c", "C5_ij C5_mk C_nl P_jkl P_imp C5_qr C5_us C_pt P_rst P_qun"},
    {"I5d", "C5_ij C5_mk C_nl P_jkl P_ipt C5_qr C5_ps C_ut P_rsn P_qmu"},
    {"I6a", "C_ij C_mk C5_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I6b", "C_ij C_mk C5_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I6c", "C_ij C_mk C5_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I6d", "C_ij C_mk C5_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I7a", "C_ij C5_mk C5_nl P_jkl P_pmn C_pr C5_qs C5_ut P_rst P_iqu"},
    {"I7b", "C_ij C5_mk C5_nl P_jkl P_ipn C_qr C5_ps C5_ut P_rst P_qmu"},
    {"I7c", "C_ij C5_mk C5_nl P_jkl P_imp C_qr C5_us C5_pt P_rst P_qun"},
    {"I7d", "C_ij C5_mk C5_nl P_jkl P_ipt C_qr C5_ps C5_ut P_rsn P_qmu"},
    {"I8a", "C_ij C5_mk C_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I8b", "C_ij C5_mk C_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I8c", "C_ij C5_mk C_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I8d", "C_ij C5_mk C_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I9a", "C5_ij C_mk C_nl P_jkl P_pmn C5_pr C_qs C_ut P_rst P_iqu"},
    {"I9b", "C5_ij C_mk C_nl P_jkl P_ipn C5_qr C_ps C_ut P_rst P_qmu"},
    {"I9c", "C5_ij C_mk C_nl P_jkl P_imp C5_qr C_us C_pt P_rst P_qun"},
    {"I9d", "C5_ij C_mk C_nl P_jkl P_ipt C5_qr C_ps C_ut P_rsn P_qmu"},
    {"I10a", "C5_ij C5_mk C5_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I10b", "C5_ij C5_mk C5_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I10c", "C5_ij C5_mk C5_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I10d", "C5_ij C5_mk C5_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I16a", "C_ij C_mk C_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I16b", "C_ij C_mk C_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I16c", "C_ij C_mk C_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I16d", "C_ij C_mk C_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I17a", "C_ij C5_mk C5_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I17b", "C_ij C5_mk C5_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I17c", "C_ij C5_mk C5_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I17d", "C_ij C5_mk C5_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I18a", "C5_ij C5_mk C_nl P_jkl P_pmn C5_pr C_qs C_ut P_rst P_iqu"},
    {"I18b", "C5_ij C5_mk C_nl P_jkl P_ipn C5_qr C_ps C_ut P_rst P_qmu"},
    {"I18c", "C5_ij C5_mk C_nl P_jkl P_imp C5_qr C_us C_pt P_rst P_qun"},
    {"I18d", "C5_ij C5_mk C_nl P_jkl P_ipt C5_qr C_ps C_ut P_rsn P_qmu"},
    {"I19a", "C_ij C_mk C_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I19b", "C_ij C_mk C_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I19c", "C_ij C_mk C_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I19d", "C_ij C_mk C_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I20a", "C5_ij C5_mk C5_nl P_jkl P_pmn C5_pr C5_qs C_ut P_rst P_iqu"},
    {"I20b", "C5_ij C5_mk C5_nl P_jkl P_ipn C5_qr C5_ps C_ut P_rst P_qmu"},
    {"I20c", "C5_ij C5_mk C5_nl P_jkl P_imp C5_qr C5_us C_pt P_rst P_qun"},
    {"I20d", "C5_ij C5_mk C5_nl P_jkl P_ipt C5_qr C5_ps C_ut P_rsn P_qmu"},
    {"I21a", "C5_ij C_mk C_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I21b", "C5_ij C_mk C_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I21c", "C5_ij C_mk C_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I21d", "C5_ij C_mk C_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I22a", "C_ij C5_mk C5_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I22b", "C_ij C5_mk C5_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I22c", "C_ij C5_mk C5_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I22d", "C_ij C5_mk C5_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I23a", "C_ij C_mk C_nl P_jkl P_pmn C5_pr C_qs C_ut P_rst P_iqu"},
    {"I23b", "C_ij C_mk C_nl P_jkl P_ipn C5_qr C_ps C_ut P_rst P_qmu"},
    {"I23c", "C_ij C_mk C_nl P_jkl P_imp C5_qr C_us C_pt P_rst P_qun"},
    {"I23d", "C_ij C_mk C_nl P_jkl P_ipt C5_qr C_ps C_ut P_rsn P_qmu"},
    {"I24a", "C5_ij C5_mk C5_nl P_jkl P_pmn C_pr C5_qs C5_ut P_rst P_iqu"},
    {"I24b", "C5_ij C5_mk C5_nl P_jkl P_ipn C_qr C5_ps C5_ut P_rst P_qmu"},
    {"I24c", "C5_ij C5_mk C5_nl P_jkl P_imp C_qr C5_us C5_pt P_rst P_qun"},
    {"I24d", "C5_ij C5_mk C5_nl P_jkl P_ipt C_qr C5_ps C5_ut P_rsn P_qmu"},
    {"I25a", "C5_ij C_mk C5_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I25b", "C5_ij C_mk C5_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I25c", "C5_ij C_mk C5_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I25d", "C5_ij C_mk C5_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I26a", "C5_ij C5_mk C_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I26b", "C5_ij C5_mk C_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I26c", "C5_ij C5_mk C_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I26d", "C5_ij C5_mk C_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I27a", "C_ij C_mk C_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I27b", "C_ij C_mk C_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I27c", "C_ij C_mk C_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I27d", "C_ij C_mk C_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I28a", "C5_ij C5_mk C5_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I28b", "C5_ij C5_mk C5_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I28c", "C5_ij C5_mk C5_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I28d", "C5_ij C5_mk C5_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I29a", "C5_ij C_mk C_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I29b", "C5_ij C_mk C_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I29c", "C5_ij C_mk C_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I29d", "C5_ij C_mk C_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I30a", "C5_ij C5_mk C_nl P_jkl P_pmn C_pr C5_qs C5_ut P_rst P_iqu"},
    {"I30b", "C5_ij C5_mk C_nl P_jkl P_ipn C_qr C5_ps C5_ut P_rst P_qmu"},
    {"I30c", "C5_ij C5_mk C_nl P_jkl P_imp C_qr C5_us C5_pt P_rst P_qun"},
    {"I30d", "C5_ij C5_mk C_nl P_jkl P_ipt C_qr C5_ps C5_ut P_rsn P_qmu"},
    {"I31a", "C_ij C_mk C_nl P_jkl P_pmn C5_pr C5_qs C_ut P_rst P_iqu"},
    {"I31b", "C_ij C_mk C_nl P_jkl P_ipn C5_qr C5_ps C_ut P_rst P_qmu"},
    {"I31c", "C_ij C_mk C_nl P_jkl P_imp C5_qr C5_us C_pt P_rst P_qun"},
    {"I31d", "C_ij C_mk C_nl P_jkl P_ipt C5_qr C5_ps C_ut P_rsn P_qmu"},
    {"I32a", "C5_ij C5_mk C5_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I32b", "C5_ij C5_mk C5_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I32c", "C5_ij C5_mk C5_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I32d", "C5_ij C5_mk C5_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I33a", "C_ij C5_mk C5_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I33b", "C_ij C5_mk C5_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I33c", "C_ij C5_mk C5_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I33d", "C_ij C5_mk C5_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I34a", "C5_ij C_mk C_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I34b", "C5_ij C_mk C_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I34c", "C5_ij C_mk C_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I34d", "C5_ij C_mk C_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I35a", "C_ij C_mk C_nl P_jkl P_pmn C_pr C5_qs C5_ut P_rst P_iqu"},
    {"I35b", "C_ij C_mk C_nl P_jkl P_ipn C_qr C5_ps C5_ut P_rst P_qmu"},
    {"I35c", "C_ij C_mk C_nl P_jkl P_imp C_qr C5_us C5_pt P_rst P_qun"},
    {"I35d", "C_ij C_mk C_nl P_jkl P_ipt C_qr C5_ps C5_ut P_rsn P_qmu"},
    {"I36a", "C5_ij C5_mk C5_nl P_jkl P_pmn C5_pr C_qs C_ut P_rst P_iqu"},
    {"I36b", "C5_ij C5_mk C5_nl P_jkl P_ipn C5_qr C_ps C_ut P_rst P_qmu"},
    {"I36c", "C5_ij C5_mk C5_nl P_jkl P_imp C5_qr C_us C_pt P_rst P_qun"},
    {"I36d", "C5_ij C5_mk C5_nl P_jkl P_ipt C5_qr C_ps C_ut P_rsn P_qmu"},
    {"I37a", "C5_ij C5_mk C_nl P_jkl P_pmn C5_pr C_qs C5_ut P_rst P_iqu"},
    {"I37b", "C5_ij C5_mk C_nl P_jkl P_ipn C5_qr C_ps C5_ut P_rst P_qmu"},
    {"I37c", "C5_ij C5_mk C_nl P_jkl P_imp C5_qr C_us C5_pt P_rst P_qun"},
    {"I37d", "C5_ij C5_mk C_nl P_jkl P_ipt C5_qr C_ps C5_ut P_rsn P_qmu"},
    {"I38a", "C_ij C5_mk C_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I38b", "C_ij C5_mk C_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I38c", "C_ij C5_mk C_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I38d", "C_ij C5_mk C_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I11a", "C5_ij C5_mk C5_nl P_jkl P_pmn C_pr C_qs C_ut P_rst P_iqu"},
    {"I11b", "C5_ij C5_mk C5_nl P_jkl P_ipn C_qr C_ps C_ut P_rst P_qmu"},
    {"I11c", "C5_ij C5_mk C5_nl P_jkl P_imp C_qr C_us C_pt P_rst P_qun"},
    {"I11d", "C5_ij C5_mk C5_nl P_jkl P_ipt C_qr C_ps C_ut P_rsn P_qmu"},
    {"I12a", "C5_ij C_mk C5_nl P_jkl P_pmn C_pr C5_qs C_ut P_rst P_iqu"},
    {"I12b", "C5_ij C_mk C5_nl P_jkl P_ipn C_qr C5_ps C_ut P_rst P_qmu"},
    {"I12c", "C5_ij C_mk C5_nl P_jkl P_imp C_qr C5_us C_pt P_rst P_qun"},
    {"I12d", "C5_ij C_mk C5_nl P_jkl P_ipt C_qr C5_ps C_ut P_rsn P_qmu"},
    {"I14a", "C5_ij C5_mk C_nl P_jkl P_pmn C_pr C_qs C5_ut P_rst P_iqu"},
    {"I14b", "C5_ij C5_mk C_nl P_jkl P_ipn C_qr C_ps C5_ut P_rst P_qmu"},
    {"I14c", "C5_ij C5_mk C_nl P_jkl P_imp C_qr C_us C5_pt P_rst P_qun"},
    {"I14d", "C5_ij C5_mk C_nl P_jkl P_ipt C_qr C_ps C5_ut P_rsn P_qmu"},
    {"I15a", "C5_ij C_mk C_nl P_jkl P_pmn C_pr C5_qs C5_ut P_rst P_iqu"},
    {"I15b", "C5_ij C_mk C_nl P_jkl P_ipn C_qr C5_ps C5_ut P_rst P_qmu"},
    {"I15c", "C5_ij C_mk C_nl P_jkl P_imp C_qr C5_us C5_pt P_rst P_qun"},
    {"I15d", "C5_ij C_mk C_nl P_jkl P_ipt C_qr C5_ps C5_ut P_rsn P_qmu"},
};

const std::vector<NamedNotation> four_spinor_deg2_table = {
    {"H_a", "C_nj C_pk C_ql C_rm P_jklm P_npqr"},
    {"H_b", "C5_nj C5_pk C5_ql C5_rm P_jklm P_npqr"},
    {"H_c", "C_nj C_pk C_ql C5_rm P_jklm P_npqr"},
    {"H_d", "C_nj C_pk C5_ql C_rm P_jklm P_npqr"},
    {"H_e", "C5_nj C_pk C_ql C_rm P_jklm P_npqr"},
    {"H_f", "C_nj C5_pk C_ql C_rm P_jklm P_npqr"},
    {"H_g", "C_nj C_pk C5_ql C5_rm P_jklm P_npqr"},
    {"H_h", "C5_nj C_pk C_ql C5_rm P_jklm P_npqr"},
    {"H_i", "C_nj C5_pk C_ql C5_rm P_jklm P_npqr"},
    {"H_j", "C5_nj C_pk C5_ql C_rm P_jklm P_npqr"},
    {"H_k", "C_nj C5_pk C5_ql C_rm P_jklm P_npqr"},
    {"H_l", "C5_nj C5_pk C_ql C_rm P_jklm P_npqr"},
    {"H_m", "C5_nj C5_pk C5_ql C_rm P_jklm P_npqr"},
    {"H_n", "C5_nj C5_pk C_ql C5_rm P_jklm P_npqr"},
    {"H_o", "C_nj C5_pk C5_ql C5_rm P_jklm P_npqr"},
    {"H_p", "C5_nj C_pk C5_ql C5_rm P_jklm P_npqr"},
};

const std::vector<NamedNotation> four_spinor_t_table = {
    {"T_a", "C_nj C_pk C_ql C_rm P_jklm P_uvqr C_uw C_vx C_sy C_tz P_npyz P_wxst"},
    {"T_b", "C_nj C_pk C_ql C_rm P_jklm P_uvqr C_uw C_vx C_sy C_tz P_nxyz P_wpst"},
    {"T_c", "C_nj C_pk C_ql C_rm P_jklm P_nvqz C_uw C_vx C_sy C_tz P_upsr P_wxyt"},
    {"T_d", "C_nj C_pk C_ql C_rm P_jklm P_nvqz C_uw C_vx C_sy C_tz P_uxsr P_wpyt"},
    {"T_e", "C_nj C_pk C_ql C_rm P_jklm P_npst C_uw C_vx C_sy C_tz P_uvqz P_wxyr"},
    {"T_f", "C_nj C_pk C_ql C_rm P_jklm P_upqt C_uw C_vx C_sy C_tz P_nvsr P_wxyz"},
    {"T_g", "C_nj C_pk C_ql C_rm P_jklm P_upqt C_uw C_vx C_sy C_tz P_nvsz P_wxyr"},
    {"T_h", "C_nj C_pk C_ql C_rm P_jklm P_upsr C_uw C_vx C_sy C_tz P_nvyt P_wxqz"},
    {"T_i", "C_nj C_pk C_ql C_rm P_jklm P_nvsr C_uw C_vx C_sy C_tz P_upyt P_wxqz"},
    {"T_j", "C_nj C_pk C_ql C_rm P_jklm P_nvqr C_uw C_vx C_sy C_tz P_uxyt P_wpsz"},
    {"T_k", "C_nj C_pk C_ql C_rm P_jklm P_upqr C_uw C_vx C_sy C_tz P_nvst P_wxyz"},
    {"T_l", "C_nj C_pk C_ql C_rm P_jklm P_npsr C_uw C_vx C_sy C_tz P_uvyz P_wxqt"},
    {"T_m", "C_nj C_pk C_ql C_rm P_jklm P_npqt C_uw C_vx C_sy C_tz P_uvsr P_wxyz"},
};

const std::vector<NamedNotation> four_spinor_y_table = {
    {"Y_a", "C5_nj C5_pk C5_ql C5_rm P_jklm P_uvqr C5_uw C5_vx C5_sy C5_tz P_npyz P_wxst"},
    {"Y_b", "C5_nj C5_pk C5_ql C5_rm P_jklm P_uvqr C5_uw C5_vx C5_sy C5_tz P_nxyz P_wpst"},
    {"Y_c", "C5_nj C5_pk C5_ql C5_rm P_jklm P_nvqz C5_uw C5_vx C5_sy C5_tz P_upsr P_wxyt"},
    {"Y_d", "C5_nj C5_pk C5_ql C5_rm P_jklm P_nvqz C5_uw C5_vx C5_sy C5_tz P_uxsr P_wpyt"},
    {"Y_e", "C5_nj C5_pk C5_ql C5_rm P_jklm P_npst C5_uw C5_vx C5_sy C5_tz P_uvqz P_wxyr"},
    {"Y_f", "C5_nj C5_pk C5_ql C5_rm P_jklm P_upqt C5_uw C5_vx C5_sy C5_tz P_nvsr P_wxyz"},
    {"Y_g", "C5_nj C5_pk C5_ql C5_rm P_jklm P_upqt C5_uw C5_vx C5_sy C5_tz P_nvsz P_wxyr"},
    {"Y_h", "C5_nj C5_pk C5_ql C5_rm P_jklm P_upsr C5_uw C5_vx C5_sy C5_tz P_nvyt P_wxqz"},
    {"Y_i", "C5_nj C5_pk C5_ql C5_rm P_jklm P_nvsr C5_uw C5_vx C5_sy C5_tz P_upyt P_wxqz"},
    {"Y_j", "C5_nj C5_pk C5_ql C5_rm P_jklm P_nvqr C5_uw C5_vx C5_sy C5_tz P_uxyt P_wpsz"},
    {"Y_k", "C5_nj C5_pk C5_ql C5_rm P_jklm P_upqr C5_uw C5_vx C5_sy C5_tz P_nvst P_wxyz"},
    {"Y_l", "C5_nj C5_pk C5_ql C5_rm P_jklm P_npsr C5_uw C5_vx C5_sy C5_tz P_uvyz P_wxqt"},
    {"Y_m", "C5_nj C5_pk C5_ql C5_rm P_jklm P_npqt C5_uw C5_vx C5_sy C5_tz P_uvsr P_wxyz"},
};

// Letters fixed in three entries so that every slot is used exactly once:
// F22 pairs n with x, F23 pairs n with s, F32 pairs t with o.
const std::vector<NamedNotation> five_spinor_pattern_table = {
    {"F1", "X_gl X_hm X_in X_jo X_ku P_ghijk P_lmnop X_qv X_rw X_sx X_ty X_pz P_qrstu P_vwxyz"},
    {"F2", "X_gl X_hm X_in X_jt X_kp P_ghijk P_lmnop X_qv X_rw X_sx X_oy X_uz P_qrstu P_vwxyz"},
    {"F3", "X_gl X_hm X_is X_jo X_kp P_ghijk P_lmnop X_qv X_rw X_nx X_ty X_uz P_qrstu P_vwxyz"},
    {"F4", "X_gl X_hr X_in X_jo X_kp P_ghijk P_lmnop X_qv X_mw X_sx X_ty X_uz P_qrstu P_vwxyz"},
    {"F5", "X_gq X_hm X_in X_jo X_kp P_ghijk P_lmnop X_lv X_rw X_sx X_ty X_uz P_qrstu P_vwxyz"},
    {"F6", "X_gl X_hm X_in X_jt X_ku P_ghijk P_lmnop X_qv X_rw X_sx X_oy X_pz P_qrstu P_vwxyz"},
    {"F7", "X_gl X_hm X_in X_jt X_kz P_ghijk P_lmnop X_qv X_rw X_sx X_oy X_pu P_qrstu P_vwxyz"},
    {"F8", "X_gl X_hm X_is X_jt X_kp P_ghijk P_lmnop X_qv X_rw X_nx X_oy X_uz P_qrstu P_vwxyz"},
    {"F9", "X_gl X_hm X_is X_jy X_kp P_ghijk P_lmnop X_qv X_rw X_nx X_ot X_uz P_qrstu P_vwxyz"},
    {"F10", "X_gl X_hr X_is X_jo X_kp P_ghijk P_lmnop X_qv X_mw X_nx X_ty X_uz P_qrstu P_vwxyz"},
    {"F11", "X_gl X_hr X_ix X_jo X_kp P_ghijk P_lmnop X_qv X_mw X_ns X_ty X_uz P_qrstu P_vwxyz"},
    {"F12", "X_gq X_hr X_in X_jo X_kp P_ghijk P_lmnop X_lv X_mw X_sx X_ty X_uz P_qrstu P_vwxyz"},
    {"F13", "X_gq X_hw X_in X_jo X_kp P_ghijk P_lmnop X_lv X_mr X_sx X_ty X_uz P_qrstu P_vwxyz"},
    {"F14", "X_gq X_hm X_in X_jo X_ku P_ghijk P_lmnop X_lv X_rw X_sx X_ty X_pz P_qrstu P_vwxyz"},
    {"F15", "X_gq X_hm X_in X_jo X_kz P_ghijk P_lmnop X_lv X_rw X_sx X_ty X_pu P_qrstu P_vwxyz"},
    {"F16", "X_gq X_hm X_in X_jt X_kp P_ghijk P_lmnop X_lv X_rw X_sx X_oy X_uz P_qrstu P_vwxyz"},
    {"F17", "X_gq X_hm X_in X_jy X_kp P_ghijk P_lmnop X_lv X_rw X_sx X_ot X_uz P_qrstu P_vwxyz"},
    {"F18", "X_gl X_hm X_is X_jo X_ku P_ghijk P_lmnop X_qv X_rw X_nx X_ty X_pz P_qrstu P_vwxyz"},
    {"F19", "X_gl X_hm X_is X_jo X_kz P_ghijk P_lmnop X_qv X_rw X_nx X_ty X_pu P_qrstu P_vwxyz"},
    {"F20", "X_gl X_hr X_in X_jt X_kp P_ghijk P_lmnop X_qv X_mw X_sx X_oy X_uz P_qrstu P_vwxyz"},
    {"F21", "X_gl X_hr X_in X_jy X_kp P_ghijk P_lmnop X_qv X_mw X_sx X_ot X_uz P_qrstu P_vwxyz"},
    {"F22", "X_gq X_hm X_is X_jo X_kp P_ghijk P_lmnop X_lv X_rw X_nx X_ty X_uz P_qrstu P_vwxyz"},
    {"F23", "X_gq X_hm X_ix X_jo X_kp P_ghijk P_lmnop X_lv X_rw X_ns X_ty X_uz P_qrstu P_vwxyz"},
    {"F24", "X_gl X_hr X_in X_jo X_ku P_ghijk P_lmnop X_qv X_mw X_sx X_ty X_pz P_qrstu P_vwxyz"},
    {"F25", "X_gl X_hr X_in X_jo X_kz P_ghijk P_lmnop X_qv X_mw X_sx X_ty X_pu P_qrstu P_vwxyz"},
    {"F26", "X_gq X_hm X_in X_jy X_kz P_ghijk P_lmnop X_lv X_rw X_sx X_to X_up P_qrstu P_vwxyz"},
    {"F27", "X_gq X_hm X_ix X_jo X_kz P_ghijk P_lmnop X_lv X_rw X_sn X_ty X_up P_qrstu P_vwxyz"},
    {"F28", "X_gq X_hw X_in X_jo X_kz P_ghijk P_lmnop X_lv X_rm X_sx X_ty X_up P_qrstu P_vwxyz"},
    {"F29", "X_gl X_hr X_in X_jy X_kz P_ghijk P_lmnop X_qv X_mw X_sx X_to X_up P_qrstu P_vwxyz"},
    {"F30", "X_gl X_hr X_ix X_jo X_kz P_ghijk P_lmnop X_qv X_mw X_sn X_ty X_up P_qrstu P_vwxyz"},
    {"F31", "X_gl X_hr X_ix X_jy X_kp P_ghijk P_lmnop X_qv X_mw X_sn X_to X_uz P_qrstu P_vwxyz"},
    {"F32", "X_gl X_hm X_is X_jy X_kz P_ghijk P_lmnop X_qv X_rw X_nx X_to X_up P_qrstu P_vwxyz"},
    {"F33", "X_gl X_hw X_is X_jo X_kz P_ghijk P_lmnop X_qv X_rm X_nx X_ty X_up P_qrstu P_vwxyz"},
    {"F34", "X_gl X_hw X_is X_jy X_kp P_ghijk P_lmnop X_qv X_rm X_nx X_to X_uz P_qrstu P_vwxyz"},
    {"F35", "X_gl X_hm X_ix X_jt X_kz P_ghijk P_lmnop X_qv X_rw X_sn X_oy X_up P_qrstu P_vwxyz"},
    {"F36", "X_gl X_hw X_in X_jt X_kz P_ghijk P_lmnop X_qv X_rm X_sx X_oy X_up P_qrstu P_vwxyz"},
    {"F37", "X_gl X_hw X_ix X_jt X_kp P_ghijk P_lmnop X_qv X_rm X_sn X_oy X_uz P_qrstu P_vwxyz"},
    {"F38", "X_gl X_hm X_ix X_jy X_ku P_ghijk P_lmnop X_qv X_rw X_sn X_to X_pz P_qrstu P_vwxyz"},
    {"F39", "X_gl X_hw X_in X_jy X_ku P_ghijk P_lmnop X_qv X_rm X_sx X_to X_pz P_qrstu P_vwxyz"},
    {"F40", "X_gl X_hw X_ix X_jo X_ku P_ghijk P_lmnop X_qv X_rm X_sn X_ty X_pz P_qrstu P_vwxyz"},
};

} // namespace spinv::detail
