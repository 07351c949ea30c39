#ifndef VERBFILL_CONFIG_HPP
#define VERBFILL_CONFIG_HPP

#include <map>
#include <set>
#include <string>

namespace verbfill {

// Lexicons and point values for the seven rules. Defaults are compiled in;
// a JSON file mirroring these field names can override any subset.
struct RuleConfig {
  std::set<std::string> terminal_particles = {"よ", "ね", "YO", "NE"};
  std::set<std::string> interrogative_pronouns = {
      // who / what / when / where / why / how / which
      "だれ", "誰",   "なに", "何",   "いつ", "どこ",  "なぜ",
      "どう", "どうして", "どれ", "DARE", "NANI", "ITSU", "DOKO",
      "NAZE", "DOU", "DOUSHITE", "DORE"};
  std::set<std::string> repetition_markers = {"も", "もっとも", "MO",
                                              "MOTTOMO"};
  std::map<int, double> points = {{1, 30.0}, {2, 5.0}, {4, 5.0},
                                  {5, 0.0},  {6, 3.0}};
  double rule3_scale = 20.0;
  double rule3_offset = -2.0;
  double rule7_high = 9.0;
  double rule7_low = 1.0;
  double rule7_margin_ratio = 2.0;
  int rule7_min_match_chars = 2;
  int rule7_max_window_chars = 30;

  double point_for(int rule_id) const;

  // Throws InputError when a constraint is violated (non-finite point,
  // margin_ratio <= 1, min_match_chars < 1, ...).
  void validate() const;

  static RuleConfig from_json_file(const std::string& path);
  static RuleConfig from_json_text(const std::string& text);
};

}  // namespace verbfill

#endif  // VERBFILL_CONFIG_HPP
