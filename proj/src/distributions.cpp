namespace hlpadic {}
