#include <doctest.h>

#include <semilinear/semilinear.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

TEST_CASE("status strings and last error") {
  CHECK(std::string(sl_status_string(SL_OK)) == "ok");
  CHECK(std::string(sl_version()).size() > 0);
  sl_params* p = nullptr;
  REQUIRE(sl_params_create(&p) == SL_OK);
  CHECK(std::string(sl_last_error()).empty());
  CHECK(sl_params_set(p, "no_such_key", "1") == SL_INVALID_ARGUMENT);
  CHECK(std::string(sl_last_error()).find("no_such_key") != std::string::npos);
  CHECK(sl_params_set(p, "N", "8") == SL_OK);
  CHECK(sl_params_set(nullptr, "N", "8") == SL_INVALID_ARGUMENT);
  CHECK(sl_params_load_file(p, "/nonexistent/config.toml") == SL_IO_ERROR);
  sl_params_destroy(p);
  CHECK(sl_params_create(nullptr) == SL_INVALID_ARGUMENT);
}

TEST_CASE("constants through the C interface") {
  sl_constants c;
  REQUIRE(sl_constants_get(1.0, &c) == SL_OK);
  CHECK(c.pi.lo <= 3.141592653589793);
  CHECK(c.pi.hi >= 3.141592653589793);
  CHECK(c.gamma.lo > 0.17);
  CHECK(c.gamma.hi < 0.2);
  CHECK(sl_constants_get(-1.0, &c) == SL_INVALID_ARGUMENT);
}

TEST_CASE("solve, write, read and check an expansion") {
  sl_params* p = nullptr;
  REQUIRE(sl_params_create(&p) == SL_OK);
  REQUIRE(sl_params_set(p, "basis_max", "15") == SL_OK);
  sl_expansion* e = nullptr;
  REQUIRE(sl_solve(p, 18.3, &e) == SL_OK);
  CHECK(sl_expansion_max_index(e) == 15);
  CHECK(sl_expansion_coeff(e, 1, 1) > 1.0);
  CHECK(sl_expansion_coeff(e, 2, 1) == 0.0);
  const std::string path = (std::filesystem::temp_directory_path() / "semilinear_capi_omega.csv").string();
  REQUIRE(sl_expansion_write_csv(e, path.c_str()) == SL_OK);
  sl_expansion* back = nullptr;
  REQUIRE(sl_expansion_read_csv(path.c_str(), &back) == SL_OK);
  CHECK(sl_expansion_coeff(back, 3, 1) == sl_expansion_coeff(e, 3, 1));
  sl_check_report r;
  REQUIRE(sl_expansion_check(p, back, "18.3", &r) == SL_OK);
  CHECK(r.positive == 1);
  CHECK(r.delta.hi < 1e-5);
  CHECK(r.kappa1.hi < 1.0);
  CHECK(r.kappa2.lo > 1.0);
  CHECK(r.K.lo > 1.0);
  CHECK(sl_expansion_check(p, back, "abc", &r) == SL_INVALID_ARGUMENT);
  sl_expansion_destroy(e);
  sl_expansion_destroy(back);
  CHECK(sl_expansion_read_csv("/nonexistent.csv", &e) == SL_IO_ERROR);
  sl_params_destroy(p);
}

namespace {
int g_messages = 0;
void count_messages(int, const char*, void*) { ++g_messages; }
}  // namespace

TEST_CASE("run through the C interface") {
  sl_params* p = nullptr;
  REQUIRE(sl_params_create(&p) == SL_OK);
  REQUIRE(sl_params_set(p, "lambda_bar", "0.3") == SL_OK);
  REQUIRE(sl_params_set(p, "basis_max", "15") == SL_OK);
  sl_set_log_callback(count_messages, nullptr);
  sl_certificate* c = nullptr;
  REQUIRE(sl_run(p, &c) == SL_OK);
  sl_set_log_callback(nullptr, nullptr);
  CHECK(g_messages > 0);
  sl_verdict v;
  REQUIRE(sl_certificate_verdict(c, &v) == SL_OK);
  CHECK(v == SL_VERDICT_PROVED_ON_SUBINTERVAL);
  char* json = nullptr;
  REQUIRE(sl_certificate_json(c, &json) == SL_OK);
  CHECK(std::strstr(json, "\"schema_version\": 1") != nullptr);
  sl_string_free(json);
  char* text = nullptr;
  REQUIRE(sl_certificate_summary(c, &text) == SL_OK);
  CHECK(std::strstr(text, "PROVED_ON_SUBINTERVAL") != nullptr);
  sl_string_free(text);
  const std::string dir = (std::filesystem::temp_directory_path() / "semilinear_capi_emit").string();
  CHECK(sl_certificate_emit(c, dir.c_str(), "json,text") == SL_OK);
  CHECK(std::filesystem::exists(dir + "/certificate.json"));
  CHECK(sl_certificate_emit(c, dir.c_str(), "pdf") == SL_INVALID_ARGUMENT);
  sl_certificate_destroy(c);

  REQUIRE(sl_params_set(p, "lambda_bar", "19.9") == SL_OK);
  CHECK(sl_run(p, &c) == SL_INVALID_ARGUMENT);
  CHECK(c == nullptr);
  sl_params_destroy(p);
}
