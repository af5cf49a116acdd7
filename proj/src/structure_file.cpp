namespace jacal {}
