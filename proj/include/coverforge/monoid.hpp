#pragma once

#include "coverforge/monoid/fg.hpp"
#include "coverforge/monoid/free_elem.hpp"
#include "coverforge/monoid/groupify.hpp"
#include "coverforge/monoid/homs.hpp"
#include "coverforge/monoid/properties.hpp"
#include "coverforge/monoid/rewrite.hpp"
