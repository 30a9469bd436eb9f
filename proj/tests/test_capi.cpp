#include <cstring>
#include <string>

#include "doctest.h"
#include "mgfil.h"

namespace {

const char* kSpec = R"(
[ring]
backend = semigroup
generators = 3 4 5

[ideal I]
gens = t^3 t^4

[ideal J]
gens = t^3

[filtration]
kind = powers
ideals = I J

[reduction A]
I = t^3
J = t^3

[analysis]
box = 4
margin = 2
command = verify-all
)";

}  // namespace

TEST_CASE("document lifecycle and run through the C surface") {
  mgfil_document* doc = nullptr;
  REQUIRE(mgfil_document_parse(kSpec, std::strlen(kSpec), &doc) == MGFIL_OK);
  REQUIRE(doc != nullptr);

  mgfil_options opt;
  mgfil_options_init(&opt);
  mgfil_bundle* bundle = nullptr;
  REQUIRE(mgfil_run(doc, nullptr, &opt, &bundle) == MGFIL_OK);
  REQUIRE(bundle != nullptr);
  CHECK(mgfil_bundle_verdict(bundle) == MGFIL_VERDICT_CONSISTENT);

  char* out = nullptr;
  size_t len = 0;
  REQUIRE(mgfil_emit(bundle, "structured", &out, &len) == MGFIL_OK);
  REQUIRE(out != nullptr);
  std::string text(out, len);
  CHECK(text.find("\"verdict\": \"consistent\"") != std::string::npos);
  CHECK(text.find("\"reduction_number\": 2") != std::string::npos);
  mgfil_buffer_free(out);

  // table and plotdata come through the same surface
  REQUIRE(mgfil_emit(bundle, "table", &out, &len) == MGFIL_OK);
  CHECK(std::string(out, len).find("postulation") != std::string::npos);
  mgfil_buffer_free(out);

  mgfil_bundle_free(bundle);
  mgfil_document_free(doc);
}

TEST_CASE("error reporting") {
  mgfil_document* doc = nullptr;
  const char* bad = "[ring]\nbackend = semigroup\ngenerators = 4 6\n";
  CHECK(mgfil_document_parse(bad, std::strlen(bad), &doc) == MGFIL_ERR_PARSE);
  CHECK(doc == nullptr);
  CHECK(std::string(mgfil_last_error()).find("gcd") != std::string::npos);

  const char* ok = kSpec;
  REQUIRE(mgfil_document_parse(ok, std::strlen(ok), &doc) == MGFIL_OK);
  mgfil_bundle* bundle = nullptr;
  CHECK(mgfil_run(doc, "no-such-command", nullptr, &bundle) == MGFIL_ERR_INVALID_ARGUMENT);
  CHECK(bundle == nullptr);

  // h1 on a dimension-one backend: clean not-applicable verdict
  REQUIRE(mgfil_run(doc, "h1", nullptr, &bundle) == MGFIL_OK);
  CHECK(mgfil_bundle_verdict(bundle) == MGFIL_VERDICT_NOT_APPLICABLE);
  char* out = nullptr;
  CHECK(mgfil_emit(bundle, "nonsense", &out, nullptr) == MGFIL_ERR_INVALID_ARGUMENT);
  mgfil_bundle_free(bundle);
  mgfil_document_free(doc);

  CHECK(mgfil_document_parse(nullptr, 0, &doc) == MGFIL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mgfil_version()).find("mgfil") != std::string::npos);
}
