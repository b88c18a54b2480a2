#include <doctest.h>

#include <cstdlib>

#include "autoheat/config.hpp"

using namespace autoheat;

TEST_SUITE("config") {
    TEST_CASE("defaults validate") {
        const RunConfig c = default_config();
        CHECK_NOTHROW(c.validate());
        CHECK(c.r_max == 12.0);
        CHECK(c.oracle_norm_bound == 25.0);
        CHECK(c.tolerance("oracle_agreement") == 1e-3);
        CHECK_THROWS_AS(static_cast<void>(c.tolerance("nope")), ConfigError);
    }

    TEST_CASE("environment supplies the data path") {
        setenv("AUTOHEAT_DATA", "/tmp/elsewhere.txt", 1);
        CHECK(default_config().maass_data_path == "/tmp/elsewhere.txt");
        unsetenv("AUTOHEAT_DATA");
        CHECK(default_config().maass_data_path != "/tmp/elsewhere.txt");
    }

    TEST_CASE("key = value text") {
        RunConfig c = default_config();
        apply_config_text(c, "# comment\n\nr_max = 16   # trailing\npanels=6\noutput_format = json\n"
                             "tolerance.tail = 1e-8\nmaass_data_path = \"/data/forms.txt\"\n");
        CHECK(c.r_max == 16.0);
        CHECK(c.panels == 6);
        CHECK(c.output_format == OutputFormat::Json);
        CHECK(c.tolerance("tail") == 1e-8);
        CHECK(c.maass_data_path == "/data/forms.txt");
    }

    TEST_CASE("errors") {
        RunConfig c = default_config();
        CHECK_THROWS_AS(apply_config_text(c, "colour = blue\n"), ConfigError);
        CHECK_THROWS_AS(apply_config_text(c, "r_max = twelve\n"), ConfigError);
        CHECK_THROWS_AS(apply_config_text(c, "panels = 2.5\n"), ConfigError);
        CHECK_THROWS_AS(apply_config_text(c, "just words\n"), ConfigError);
        CHECK_THROWS_AS(parse_output_format("xml"), ConfigError);
        RunConfig bad = default_config();
        bad.r_max = -1.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        bad = default_config();
        bad.tolerances["tail"] = 0.0;
        CHECK_THROWS_AS(bad.validate(), ConfigError);
        CHECK_THROWS_AS(apply_config_file(c, "/nonexistent.cfg"), ConfigError);
    }
}
