#pragma once

namespace evoart {

// The node primitive set. 13 total functions over (x, y, param) with
// x, y real in [0,255] and param integer in [0,255]; every function
// returns a finite real in [0,255].
//
//   1  bitwise OR of rounded x, y
//   2  bitwise AND of param and rounded x
//   3  (x + y) mod 255
//   4  |x - y|
//   5  255 - x
//   6  |cos x| * 255            (x in radians)
//   7  |tan(((x mod 45) * pi) / 180)| * 255
//   8  (|tan x| * 255) mod 255
//   9  min(sqrt((x-param)^2 + (y-param)^2), 255)
//  10  clamp(x mod (param+1) + (255 - param), 0, 255)
//  11  (x + y) / 2
//  12  255 * (min+1)/(max+1) of {x, y}
//  13  sqrt((x-param)^2 + (y-param)^2) mod 255
constexpr int kFunctionCount = 13;

double apply_function(int function_id, double x, double y, int param);

}  // namespace evoart
